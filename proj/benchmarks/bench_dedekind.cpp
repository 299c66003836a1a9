#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "dedekind/criterion.hpp"
#include "dedekind/parse.hpp"
#include "dedekind/residue_factor.hpp"

using namespace dedekind;

namespace {

struct Example {
    const char* field;
    const char* poly;
};

const std::vector<Example> kExamples = {
    {"qp:2", "x^2 - 5"},
    {"qp:3", "x^3 - 3*x + 9"},
    {"lex:F2", "x^3 + (Y)"},
    {"lex:F2", "x^3 + (Y)*x + (X)"},
    {"lambda-trivial:F2", "x^3 + (X)"},
    {"lambda-composite:p2:sqrt2", "x^3 + 2*x + 2"},
};

void BM_DedekindTest(benchmark::State& state)
{
    const auto& ex = kExamples[static_cast<std::size_t>(state.range(0))];
    const auto d = parse_descriptor(ex.field);
    const Poly f = parse_poly(ex.poly, d);
    state.SetLabel(std::string(ex.field) + " " + ex.poly);
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_test(f));
}
BENCHMARK(BM_DedekindTest)->DenseRange(0, static_cast<int>(kExamples.size()) - 1);

void BM_ErshovTest(benchmark::State& state)
{
    const auto& ex = kExamples[static_cast<std::size_t>(state.range(0))];
    const auto d = parse_descriptor(ex.field);
    const Poly f = parse_poly(ex.poly, d);
    state.SetLabel(std::string(ex.field) + " " + ex.poly);
    for (auto _ : state) benchmark::DoNotOptimize(ershov_test(f));
}
BENCHMARK(BM_ErshovTest)->DenseRange(0, static_cast<int>(kExamples.size()) - 1);

// Random monic polynomials of the given degree over F_q.
void BM_Factor(benchmark::State& state)
{
    const auto q = static_cast<std::uint32_t>(state.range(0));
    const auto deg = static_cast<std::size_t>(state.range(1));
    std::mt19937_64 rng(1);
    std::vector<ResiduePoly> inputs;
    for (int i = 0; i < 64; ++i) {
        ResiduePoly::Coeffs c(deg + 1);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % q);
        c.back() = 1;
        inputs.push_back(ResiduePoly::from_canonical(q, std::move(c)));
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(factor(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Factor)->Args({2, 8})->Args({2, 16})->Args({3, 8})->Args({5, 6})->Args({101, 6});

void BM_BivariateGcd(benchmark::State& state)
{
    const auto d = ValuationDescriptor::lex(3);
    const FieldElement a = parse_field_element("(X^3*Y + 2*X*Y^2 + 1)*(X + Y^2 + 2)", d);
    const FieldElement b = parse_field_element("(X^3*Y + 2*X*Y^2 + 1)*(X^2 + Y + 1)", d);
    for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_BivariateGcd);

void BM_Separability(benchmark::State& state)
{
    const auto d = ValuationDescriptor::lex(3);
    const Poly f = parse_poly("x^5 + (X*Y + 1)/(Y)*x^3 + (2*X^2*Y^3 + Y)*x + (X + Y^2)", d);
    for (auto _ : state) benchmark::DoNotOptimize(is_separable(f));
}
BENCHMARK(BM_Separability);

} // namespace

BENCHMARK_MAIN();
