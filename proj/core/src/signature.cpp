#include "autstab/signature.hpp"

#include <sstream>

namespace autstab {

AlgebraSignature::AlgebraSignature(std::vector<Atom> atoms, Field field, bool commutative_shadow)
    : atoms_(std::move(atoms)), field_(field), shadow_(commutative_shadow) {
    if (atoms_.empty()) fail(ErrorCode::BadFamilyParams, "signature needs at least one atom");
    int z_counter = 0;
    int xy_counter = 0;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        const Atom& atom = atoms_[a];
        if (atom.size <= 0) fail(ErrorCode::BadFamilyParams, "atom size must be positive");
        atom_offsets_.push_back(static_cast<int>(names_.size()));
        if (atom.kind == AtomKind::weyl) {
            for (int i = 0; i < atom.size; ++i) {
                ++xy_counter;
                names_.push_back("x" + std::to_string(xy_counter));
                names_.push_back("y" + std::to_string(xy_counter));
                atom_of_.push_back(static_cast<int>(a));
                atom_of_.push_back(static_cast<int>(a));
            }
        } else {
            for (int i = 0; i < atom.size; ++i) {
                ++z_counter;
                names_.push_back("z" + std::to_string(z_counter));
                atom_of_.push_back(static_cast<int>(a));
            }
        }
    }
}

bool AlgebraSignature::is_commutative() const {
    if (shadow_) return true;
    for (const Atom& atom : atoms_) {
        if (atom.kind == AtomKind::weyl) return false;
    }
    return true;
}

void AlgebraSignature::check_generator(int g) const {
    if (g < 0 || g >= generator_count()) {
        fail(ErrorCode::IndexOutOfRange,
             "generator " + std::to_string(g) + " of " + std::to_string(generator_count()));
    }
}

const std::string& AlgebraSignature::generator_name(int g) const {
    check_generator(g);
    return names_[static_cast<std::size_t>(g)];
}

int AlgebraSignature::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool AlgebraSignature::invertible(int g) const {
    check_generator(g);
    return atoms_[static_cast<std::size_t>(atom_of_[static_cast<std::size_t>(g)])].kind ==
           AtomKind::laurent;
}

bool AlgebraSignature::is_weyl_x(int g) const {
    check_generator(g);
    const int a = atom_of_[static_cast<std::size_t>(g)];
    if (atoms_[static_cast<std::size_t>(a)].kind != AtomKind::weyl) return false;
    return (g - atom_offsets_[static_cast<std::size_t>(a)]) % 2 == 0;
}

bool AlgebraSignature::is_weyl_y(int g) const {
    check_generator(g);
    const int a = atom_of_[static_cast<std::size_t>(g)];
    if (atoms_[static_cast<std::size_t>(a)].kind != AtomKind::weyl) return false;
    return (g - atom_offsets_[static_cast<std::size_t>(a)]) % 2 == 1;
}

int AlgebraSignature::weyl_partner(int g) const {
    if (is_weyl_x(g)) return g + 1;
    if (is_weyl_y(g)) return g - 1;
    return -1;
}

int AlgebraSignature::atom_of(int g) const {
    check_generator(g);
    return atom_of_[static_cast<std::size_t>(g)];
}

int AlgebraSignature::atom_offset(int a) const {
    if (a < 0 || a >= static_cast<int>(atoms_.size())) {
        fail(ErrorCode::IndexOutOfRange, "atom " + std::to_string(a));
    }
    return atom_offsets_[static_cast<std::size_t>(a)];
}

bool AlgebraSignature::operator==(const AlgebraSignature& rhs) const {
    return atoms_ == rhs.atoms_ && field_ == rhs.field_ && shadow_ == rhs.shadow_;
}

std::string AlgebraSignature::to_string() const {
    std::ostringstream os;
    if (shadow_) os << "gr ";
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (a > 0) os << " x ";
        switch (atoms_[a].kind) {
            case AtomKind::polynomial: os << "poly:"; break;
            case AtomKind::laurent: os << "laurent:"; break;
            case AtomKind::weyl: os << "weyl:"; break;
        }
        os << atoms_[a].size;
    }
    return os.str();
}

SignaturePtr make_polynomial(int m, const Field& field) {
    return std::make_shared<AlgebraSignature>(std::vector<Atom>{{AtomKind::polynomial, m}}, field);
}

SignaturePtr make_laurent(int m, const Field& field) {
    return std::make_shared<AlgebraSignature>(std::vector<Atom>{{AtomKind::laurent, m}}, field);
}

SignaturePtr make_weyl(int n, const Field& field) {
    return std::make_shared<AlgebraSignature>(std::vector<Atom>{{AtomKind::weyl, n}}, field);
}

SignaturePtr tensor_product(const SignaturePtr& a, const SignaturePtr& b) {
    if (!a || !b) fail(ErrorCode::SignatureMismatch, "tensor factor is null");
    if (!(a->field() == b->field())) {
        fail(ErrorCode::FieldMismatch, "tensor factors over different fields");
    }
    if (a->commutative_shadow() || b->commutative_shadow()) {
        fail(ErrorCode::SignatureMismatch, "tensor factors must not be shadows");
    }
    std::vector<Atom> atoms = a->atoms();
    atoms.insert(atoms.end(), b->atoms().begin(), b->atoms().end());
    return std::make_shared<AlgebraSignature>(std::move(atoms), a->field());
}

SignaturePtr graded_shadow(const SignaturePtr& sig) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "signature is null");
    return std::make_shared<AlgebraSignature>(sig->atoms(), sig->field(), true);
}

SignaturePtr parse_signature(const std::string& text, const Field& field) {
    std::vector<Atom> atoms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ':' ) ++pos;
        if (pos >= text.size()) fail(ErrorCode::ParseError, "bad algebra spec '" + text + "'");
        std::string kind = text.substr(start, pos - start);
        ++pos;  // ':'
        AtomKind k;
        if (kind == "poly") k = AtomKind::polynomial;
        else if (kind == "laurent") k = AtomKind::laurent;
        else if (kind == "weyl") k = AtomKind::weyl;
        else fail(ErrorCode::ParseError, "unknown atom kind '" + kind + "'");
        int size = 0;
        bool digits = false;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            size = size * 10 + (text[pos] - '0');
            if (size > 64) fail(ErrorCode::ParseError, "atom size too large");
            ++pos;
            digits = true;
        }
        if (!digits || size == 0) fail(ErrorCode::ParseError, "bad atom size in '" + text + "'");
        atoms.push_back({k, size});
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != 'x') fail(ErrorCode::ParseError, "expected ' x ' in '" + text + "'");
        ++pos;
    }
    return std::make_shared<AlgebraSignature>(std::move(atoms), field);
}

}  // namespace autstab
