#include "permres/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::hook(int arm, int leg) {
    if (arm < 1 || leg < 0) throw std::invalid_argument("hook needs arm >= 1 and leg >= 0");
    std::vector<int> parts(static_cast<std::size_t>(leg) + 1, 1);
    parts[0] = arm;
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int value, int count) {
    if (value < 0 || count < 0) throw std::invalid_argument("rectangle needs nonnegative sides");
    if (value == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_hook() const {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] != 1) return false;
    }
    return true;
}

std::vector<int> Partition::padded(int size) const {
    if (length() > size) throw std::invalid_argument("partition longer than requested padding");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(size), 0);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& pi) {
    std::vector<int> out(static_cast<std::size_t>(pi[0]), 0);
    for (int part : pi.parts()) {
        for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(out));
}

namespace {

int hook_length(const Partition& pi, const Partition& pi_conj, int row, int col) {
    return (pi[row] - col - 1) + (pi_conj[col] - row - 1) + 1;
}

}  // namespace

BigInt specht_dim(const Partition& pi) {
    const Partition pc = conjugate(pi);
    BigInt hooks = 1;
    for (int i = 0; i < pi.length(); ++i) {
        for (int j = 0; j < pi[i]; ++j) hooks *= hook_length(pi, pc, i, j);
    }
    return factorial(pi.weight()) / hooks;
}

BigInt schur_dim(const Partition& pi, int m) {
    if (pi.length() > m) return 0;
    const Partition pc = conjugate(pi);
    BigInt numerator = 1;
    BigInt hooks = 1;
    for (int i = 0; i < pi.length(); ++i) {
        for (int j = 0; j < pi[i]; ++j) {
            numerator *= m + j - i;
            hooks *= hook_length(pi, pc, i, j);
        }
    }
    return numerator / hooks;
}

BigInt induced_dim(const BigInt& dim_w, const BigInt& order_h, const BigInt& order_g) {
    if (dim_w <= 0 || order_h <= 0 || order_g <= 0) {
        throw std::invalid_argument("induced_dim needs positive arguments");
    }
    const BigInt total = dim_w * order_g;
    if (total % order_h != 0) {
        throw std::invalid_argument("induced_dim: subgroup order " + order_h.str() +
                                    " does not divide dim(W)*|G| = " + total.str());
    }
    return total / order_h;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == max_length) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, max_length, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_length, int max_part) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> prefix;
    partitions_rec(weight, max_part, max_length, prefix, out);
    return out;
}

WeightSequence WeightSequence::shifted(int zeros, const Partition& pi, int size) {
    if (zeros < 0 || zeros + pi.length() > size) {
        throw std::invalid_argument("shifted weight sequence does not fit the requested size");
    }
    std::vector<int> entries(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < pi.length(); ++i) entries[static_cast<std::size_t>(zeros + i)] = pi[i];
    return WeightSequence(std::move(entries));
}

bool WeightSequence::is_partition() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > entries_[i - 1]) return false;
    }
    return entries_.empty() || entries_.back() >= 0;
}

std::string WeightSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

}  // namespace permres
