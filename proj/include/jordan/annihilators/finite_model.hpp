#pragma once

#include "jordan/algebra/algebra.hpp"
#include "jordan/algebra/validate.hpp"
#include "jordan/util/bitset.hpp"
#include "jordan/util/parallel.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace jordan {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Canonical key of an echelon subspace over F_p.
inline std::vector<std::uint32_t> subspace_key(const Subspace<ModP>& V) {
  std::vector<std::uint32_t> key;
  key.reserve(1 + V.rank() * (1 + V.ambient_dim()));
  key.push_back(static_cast<std::uint32_t>(V.rank()));
  for (std::size_t r = 0; r < V.rank(); ++r) {
    key.push_back(static_cast<std::uint32_t>(V.pivots()[r]));
    for (const auto& c : V.basis()[r]) key.push_back(c.value());
  }
  return key;
}

/// Exhaustive view of an algebra over F_p: every element is addressed by its
/// index in lexicographic coordinate order (first coordinate most
/// significant). Elements are grouped into kernel classes by ker U_x.
class FiniteModel {
 public:
  explicit FiniteModel(const JordanAlgebra<ModP>& A, std::uint64_t budget = kDefaultBudget, unsigned threads = 1)
      : A_(A), p_(A.field().p), dim_(A.dim()), threads_(threads) {
    if (!A.field().is_prime_field()) throw Error(ErrorCode::InvalidField, "exhaustive mode needs a prime field");
    size_ = checked_pow(p_, dim_);
    if (size_ > budget)
      throw Error(ErrorCode::TooLarge, std::to_string(p_) + "^" + std::to_string(dim_) + " elements exceed budget " +
                                           std::to_string(budget));
    build_squares();
  }

  const JordanAlgebra<ModP>& algebra() const { return A_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  Element<ModP> element(std::uint64_t idx) const {
    Vec<ModP> v(dim_);
    decode_index(idx, p_, v);
    return Element<ModP>(std::move(v));
  }
  std::uint64_t index(const Element<ModP>& x) const {
    A_.check(x);
    return encode_index(x.coords(), p_);
  }

  std::uint32_t square_of(std::uint64_t idx) const { return square_of_[idx]; }
  /// Distinct squares, ascending.
  const std::vector<std::uint32_t>& squares() const { return squares_; }
  /// Position of idx in squares(), or -1.
  std::int32_t square_pos(std::uint64_t idx) const { return square_pos_[idx]; }
  bool is_square(std::uint64_t idx) const { return square_pos_[idx] >= 0; }
  const std::vector<std::uint32_t>& idempotents() const { return idempotents_; }

  /// Element indices of V in ascending order.
  std::vector<std::uint32_t> elements_of(const Subspace<ModP>& V) const {
    const std::size_t r = V.rank();
    const std::uint64_t count = checked_pow(p_, r);
    std::vector<std::uint32_t> out;
    out.reserve(count);
    std::vector<ModP> coeffs(r);
    for (std::uint64_t c = 0; c < count; ++c) {
      decode_index(c, p_, coeffs);
      Vec<ModP> v = V.combine(coeffs);
      out.push_back(static_cast<std::uint32_t>(encode_index(v, p_)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Bitset over squares() of the squares lying in V.
  Bitset squares_in(const Subspace<ModP>& V) const {
    Bitset bits(squares_.size());
    if (checked_pow(p_, V.rank()) <= squares_.size()) {
      for (auto idx : elements_of(V))
        if (square_pos_[idx] >= 0) bits.set(static_cast<std::size_t>(square_pos_[idx]));
    } else {
      for (std::size_t s = 0; s < squares_.size(); ++s)
        if (V.contains(element(squares_[s]).coords())) bits.set(s);
    }
    return bits;
  }

  /// Kernel classes: elements x with equal ker U_x share a class. Classes are
  /// numbered in order of their smallest member.
  std::uint32_t kernel_class(std::uint64_t idx) const {
    ensure_classes();
    return class_of_[idx];
  }
  std::size_t class_count() const {
    ensure_classes();
    return kernels_.size();
  }
  const Subspace<ModP>& class_kernel(std::size_t c) const {
    ensure_classes();
    return kernels_[c];
  }
  /// ker U_x n A^2 for the class, as a bitset over squares().
  const Bitset& class_squares(std::size_t c) const {
    ensure_classes();
    return kernel_squares_[c];
  }
  std::uint32_t class_representative(std::size_t c) const {
    ensure_classes();
    return class_rep_[c];
  }
  std::uint64_t class_size(std::size_t c) const {
    ensure_classes();
    return class_size_[c];
  }

  Matrix<ModP> u_op(std::uint64_t idx) const { return A_.u_op(element(idx)); }

 private:
  void build_squares() {
    square_of_.resize(size_);
    parallel_for(0, size_, threads_, [&](std::size_t idx) {
      Element<ModP> a = element(idx);
      square_of_[idx] = static_cast<std::uint32_t>(encode_index(A_.square(a).coords(), p_));
    });
    square_pos_.assign(size_, -1);
    for (std::uint64_t i = 0; i < size_; ++i) square_pos_[square_of_[i]] = 0;
    for (std::uint64_t i = 0; i < size_; ++i)
      if (square_pos_[i] == 0) {
        square_pos_[i] = static_cast<std::int32_t>(squares_.size());
        squares_.push_back(static_cast<std::uint32_t>(i));
      }
    for (std::uint64_t i = 0; i < size_; ++i)
      if (square_of_[i] == i) idempotents_.push_back(static_cast<std::uint32_t>(i));
  }

  void ensure_classes() const {
    std::call_once(*classes_once_, [this] { build_classes(); });
  }

  void build_classes() const {
    class_of_.resize(size_);
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> ids;
    constexpr std::size_t kChunk = 4096;
    std::vector<Subspace<ModP>> chunk_kernels(kChunk);
    for (std::uint64_t start = 0; start < size_; start += kChunk) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, size_ - start));
      parallel_for(0, len, threads_, [&](std::size_t i) { chunk_kernels[i] = kernel(u_op(start + i)); });
      for (std::size_t i = 0; i < len; ++i) {
        auto key = subspace_key(chunk_kernels[i]);
        auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(kernels_.size()));
        if (inserted) {
          kernels_.push_back(std::move(chunk_kernels[i]));
          class_rep_.push_back(static_cast<std::uint32_t>(start + i));
          class_size_.push_back(0);
        }
        class_of_[start + i] = it->second;
        ++class_size_[it->second];
      }
    }
    kernel_squares_.resize(kernels_.size());
    parallel_for(0, kernels_.size(), threads_, [&](std::size_t c) { kernel_squares_[c] = squares_in(kernels_[c]); });
  }

  JordanAlgebra<ModP> A_;
  std::uint32_t p_;
  std::size_t dim_;
  unsigned threads_;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> square_of_;
  std::vector<std::int32_t> square_pos_;
  std::vector<std::uint32_t> squares_;
  std::vector<std::uint32_t> idempotents_;

  std::unique_ptr<std::once_flag> classes_once_ = std::make_unique<std::once_flag>();
  mutable std::vector<std::uint32_t> class_of_;
  mutable std::vector<Subspace<ModP>> kernels_;
  mutable std::vector<Bitset> kernel_squares_;
  mutable std::vector<std::uint32_t> class_rep_;
  mutable std::vector<std::uint64_t> class_size_;
};

}  // namespace jordan
