#include "permres/oracle.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "permres/graded.hpp"
#include "weight_space.hpp"

namespace permres {

using detail::WeightSpaceEngine;

BigInt GradedDims::at(int t) const {
    auto it = dims.find(t);
    return it == dims.end() ? BigInt(0) : it->second;
}

BigInt BettiTable::at(int step, int degree) const {
    auto it = entries.find({step, degree});
    return it == entries.end() ? BigInt(0) : it->second;
}

void BettiTable::set(int step, int degree, const BigInt& value) {
    if (value < 0) throw std::invalid_argument("Betti numbers are nonnegative");
    entries[{step, degree}] = value;
}

std::map<std::pair<int, int>, BigInt> BettiTable::nonzero() const {
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [key, v] : entries) {
        if (v != 0) out.emplace(key, v);
    }
    return out;
}

BigInt BettiTable::step_total(int step) const {
    BigInt total = 0;
    for (const auto& [key, v] : entries) {
        if (key.first == step) total += v;
    }
    return total;
}

BigInt ambient_dim(const IdealSpec& spec, int t) {
    if (t < 0) return 0;
    const int vars = spec.ring().num_vars();
    return binomial(vars + t - 1, t);
}

namespace {

void check_cap_on_basis(const IdealSpec& spec, int t, const ResourceLimits& limits) {
    const BigInt full = ambient_dim(spec, t);
    if (!limits.expensive && full > limits.max_basis) {
        throw ResourceCapError("degree too large for graded basis",
                               full > BigInt(UINT64_MAX) ? UINT64_MAX : full.convert_to<std::uint64_t>(),
                               limits.max_basis);
    }
}

BigInt betti_with(WeightSpaceEngine& engine, int i, int d, bool symmetric) {
    const int k = i + 1;
    if (i < 0 || d - k < 0 || k > engine.ring().num_vars()) return 0;
    BigInt total = 0;
    for (const auto& orbit : engine.weights_of_degree(d, symmetric)) {
        const std::size_t h = engine.koszul_homology(orbit.rep, k);
        if (h) total += orbit.size * h;
    }
    return total;
}

}  // namespace

BigInt hilbert_oracle(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config) {
    spec.validate();
    if (t < spec.kappa) return 0;
    check_cap_on_basis(spec, t, config.limits);
    WeightSpaceEngine engine(spec, field, config.limits);
    BigInt total = 0;
    for (const auto& orbit : engine.weights_of_degree(t, config.use_symmetry)) {
        total += orbit.size * engine.piece(orbit.rep).ideal_dim;
    }
    return total;
}

BigInt hilbert_oracle_direct(const IdealSpec& spec, int t, const PrimeField& field, const ResourceLimits& limits) {
    spec.validate();
    if (t < spec.kappa) return 0;
    return multiply_map_rank_direct(spec.ring(), expand_generators(spec), spec.kappa, t, field, limits);
}

QuotientBasis quotient_basis(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config) {
    spec.validate();
    QuotientBasis out;
    if (t < 0) return out;
    check_cap_on_basis(spec, t, config.limits);
    WeightSpaceEngine engine(spec, field, config.limits);
    for (const auto& orbit : engine.weights_of_degree(t, /*symmetric=*/false)) {
        const auto& p = engine.piece(orbit.rep);
        for (std::uint32_t s : p.standard) out.monomials.push_back(p.monomials[s]);
    }
    std::sort(out.monomials.begin(), out.monomials.end());
    out.dimension = out.monomials.size();
    return out;
}

BigInt quotient_dim(const IdealSpec& spec, int t, const PrimeField& field, const OracleConfig& config) {
    spec.validate();
    if (t < 0) return 0;
    check_cap_on_basis(spec, t, config.limits);
    WeightSpaceEngine engine(spec, field, config.limits);
    BigInt total = 0;
    for (const auto& orbit : engine.weights_of_degree(t, config.use_symmetry)) {
        total += orbit.size * engine.piece(orbit.rep).quotient_dim();
    }
    return total;
}

BigInt betti_oracle(const IdealSpec& spec, int i, int d, const PrimeField& field, const OracleConfig& config) {
    spec.validate();
    if (i < 0) throw std::invalid_argument("step must be nonnegative");
    if (d < spec.kappa + i) return 0;
    WeightSpaceEngine engine(spec, field, config.limits);
    return betti_with(engine, i, d, config.use_symmetry);
}

BettiTable betti_table(const IdealSpec& spec, int max_degree, const PrimeField& field, const OracleConfig& config) {
    spec.validate();
    BettiTable table;
    table.spec = spec;
    table.primes = {field.modulus()};
    WeightSpaceEngine engine(spec, field, config.limits);
    for (int d = spec.kappa; d <= max_degree; ++d) {
        // A minimal resolution raises the degree by at least one per step.
        for (int i = 0; i <= d - spec.kappa; ++i) table.set(i, d, betti_with(engine, i, d, config.use_symmetry));
    }
    return table;
}

BigInt agreed(const std::vector<PrimeField>& primes, const std::function<BigInt(const PrimeField&)>& compute,
              std::vector<std::uint32_t>* primes_used) {
    const auto result = consensus(primes, compute, [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; });
    if (primes_used) *primes_used = result.primes_used;
    return result.value;
}

}  // namespace permres
