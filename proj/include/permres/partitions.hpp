#pragma once

#include <compare>
#include <limits>
#include <string>
#include <vector>

#include "permres/bigint.hpp"

namespace permres {

/// Weakly decreasing sequence of positive integers, stored without trailing zeros.
///
/// Indexes Specht modules [pi] of the symmetric group and Schur modules S_pi of
/// the general linear group. Reading past the last part yields 0, so a
/// partition can be treated as a padded sequence wherever that is convenient.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and drops them. Throws std::invalid_argument if
    /// the sequence is not weakly decreasing or contains a negative entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// The hook (arm, 1^leg). arm must be positive.
    static Partition hook(int arm, int leg);

    /// (value)^count, i.e. a rectangle with `count` rows of length `value`.
    static Partition rectangle(int value, int count);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool is_hook() const;

    /// Zero-padded copy of length `size`; throws if the partition is longer.
    std::vector<int> padded(int size) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& pi);

/// Dimension of the Specht module [pi]: |pi|! over the product of hook lengths.
BigInt specht_dim(const Partition& pi);

/// Dimension of S_pi(C^m) by the hook-content formula; 0 when length(pi) > m.
BigInt schur_dim(const Partition& pi, int m);

/// dim W * |G| / |H| for an induced module Ind_H^G W. Throws std::invalid_argument
/// when the quotient is not an integer, which means the subgroup order is wrong.
BigInt induced_dim(const BigInt& dim_w, const BigInt& order_h, const BigInt& order_g);

/// All partitions of `weight` with at most `max_length` parts, each at most
/// `max_part`, in reverse lexicographic order ((w) first).
std::vector<Partition> partitions_of(int weight,
                                     int max_length = std::numeric_limits<int>::max(),
                                     int max_part = std::numeric_limits<int>::max());

/// Integer sequence of fixed length, not necessarily decreasing. Input to the
/// dotted Weyl group action.
class WeightSequence {
public:
    WeightSequence() = default;
    explicit WeightSequence(std::vector<int> entries) : entries_(std::move(entries)) {}
    WeightSequence(std::initializer_list<int> entries) : entries_(entries) {}

    /// (0^zeros, pi_1, ..., pi_l, 0, ...) padded to `size` entries.
    static WeightSequence shifted(int zeros, const Partition& pi, int size);

    const std::vector<int>& entries() const { return entries_; }
    std::vector<int>& entries() { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t i) const { return entries_[i]; }

    bool is_partition() const;
    std::string to_string() const;

    bool operator==(const WeightSequence&) const = default;

private:
    std::vector<int> entries_;
};

}  // namespace permres
