#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "autstab/closure.hpp"
#include "autstab/filtration.hpp"
#include "autstab/parser.hpp"

using namespace autstab;

namespace {

const Field Q = Field::rationals();

Element dense_element(const SignaturePtr& sig, int degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 9);
    Element f(sig);
    for (const Monomial& m : monomials_up_to_degree(sig, degree)) {
        f.add_term(m, Scalar(Q, coeff(rng)));
    }
    return f;
}

void BM_WeylMultiply(benchmark::State& state) {
    const auto sig = make_weyl(2, Q);
    const Element a = dense_element(sig, static_cast<int>(state.range(0)), 1);
    const Element b = dense_element(sig, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_WeylMultiply)->Arg(3)->Arg(5);

void BM_ScriptedClosurePoly(benchmark::State& state) {
    const auto sig = make_polynomial(2, Q);
    const Element seed = parse_element("z1^2*z2 + z1", sig);
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scripted_closure(seed, cap));
    }
}
BENCHMARK(BM_ScriptedClosurePoly)->Arg(4)->Arg(6);

void BM_ScriptedClosureWeyl(benchmark::State& state) {
    const auto sig = make_weyl(1, Q);
    const Element seed = parse_element("x1*y1", sig);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scripted_closure(seed, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ScriptedClosureWeyl)->Arg(3)->Arg(4);

void BM_VerifyCertificate(benchmark::State& state) {
    const auto sig = make_polynomial(2, Q);
    const ClosureCertificate cert = scripted_closure(parse_element("z1^2*z2 + z1", sig), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_certificate(cert));
    }
}
BENCHMARK(BM_VerifyCertificate);

void BM_SaturateAffine(benchmark::State& state) {
    const auto sig = make_polynomial(1, Q);
    const std::vector<EndoMap> pool = pool_preset(sig, "affine");
    const Element seed = Element::generator(sig, 0).pow(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(saturate({seed}, pool, 8, 50));
    }
}
BENCHMARK(BM_SaturateAffine)->Arg(3)->Arg(5);

void BM_GrowthSequence(benchmark::State& state) {
    const auto sig = parse_signature("poly:1 x weyl:1", Q);
    std::vector<Element> gens{Element::one(sig)};
    for (int g = 0; g < sig->generator_count(); ++g) gens.push_back(Element::generator(sig, g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(growth_sequence(sig, gens, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GrowthSequence)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
