#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// A weight written as a nonnegative combination of named base weights minus a
/// finitely supported rational combination of simple roots:
///
///     sum_b base[b] * b  -  sum_i root_coeffs[i] * alpha_i.
///
/// Base weights enter only through their coroot pairing vectors, which the
/// datum stores by name. Normalized form drops zero entries; equality and
/// ordering are structural on the normalized form. A single-name base covers
/// everything inside one crystal; sums of names show up in tensor products.
struct Weight {
  std::map<std::string, Rational> base;
  std::map<size_t, Rational> root_coeffs;

  void normalize();
  bool is_zero() const { return base.empty() && root_coeffs.empty(); }
  /// Height of the subtracted root part (the truncation depth of this weight).
  Rational depth() const;
  bool integral_root_coeffs() const;
  Rational root_coeff(size_t i) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { a += b; return a; }
  friend Weight operator-(Weight a, const Weight& b) { a -= b; return a; }
  friend Weight operator*(const Rational& c, Weight w);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Validated Borcherds-Cartan datum: index labels, an even symmetrizable
/// Borcherds-Cartan matrix, a symmetrizer, and named dominant base weights
/// given by their coroot pairing vectors.
struct BorcherdsCartanDatum {
  std::vector<std::string> labels;
  std::vector<std::vector<long long>> matrix;
  std::vector<long long> symmetrizer;
  std::map<std::string, std::vector<long long>> base_weights;

  size_t rank() const { return labels.size(); }
  long long a(size_t i, size_t j) const { return matrix[i][j]; }
  bool is_real(size_t i) const { return matrix[i][i] == 2; }
  bool is_imaginary(size_t i) const { return !is_real(i); }
  std::vector<size_t> real_indices() const;
  std::vector<size_t> imaginary_indices() const;
  size_t index_of(const std::string& label) const;

  Weight zero_weight() const { return Weight{}; }
  Weight base_weight(const std::string& name) const;
  /// alpha_i as a Weight (zero base, coefficient -1 at i).
  Weight alpha(size_t i) const;
  /// Exact pairing <alpha_i^vee, w>.
  Rational pairing(size_t i, const Weight& w) const;
  std::vector<Rational> pairing_vector(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
};

/// Checks the three Borcherds-Cartan conditions, evenness and symmetrizability;
/// computes a symmetrizer when none is given. Every base weight must have all
/// pairings >= 0. Throws InputError naming the offending entry.
BorcherdsCartanDatum validate_datum(std::vector<std::string> labels,
                                    std::vector<std::vector<long long>> matrix,
                                    std::optional<std::vector<long long>> symmetrizer,
                                    std::map<std::string, std::vector<long long>> base_weights);

/// Word over the index set of a datum; position 0 is applied first (the
/// rightmost letter of the tuple (i_k, ..., i_2, i_1)).
using GWord = std::vector<size_t>;

/// Letter of the associated index set: (parent index, copy >= 1). Real indices
/// only ever carry copy 1.
using TildeLetter = std::pair<size_t, long long>;
using TildeWord = std::vector<TildeLetter>;

/// Truncation of the associated Kac-Moody datum: each imaginary index i is
/// replaced by copies (i,1), ..., (i,copies[i]); real indices become (i,1).
/// The derived matrix has diagonal 2 everywhere and a_ij elsewhere, so the
/// derived datum is an ordinary (all-real) Borcherds-Cartan datum and every
/// library operation applies to it unchanged. Base weights lift with equal
/// pairings on all copies.
struct AssociatedDatum {
  BorcherdsCartanDatum parent;
  std::vector<long long> copies;
  BorcherdsCartanDatum datum;
  std::vector<TildeLetter> derived_pairs;
  std::map<TildeLetter, size_t> position;

  size_t derived_index(size_t parent_index, long long copy) const;
  GWord to_derived_word(const TildeWord& w) const;
  /// Pairing of a derived-datum weight against a copy of i beyond the
  /// truncation. All unused copies pair identically, so one value suffices.
  Rational pairing_fresh_copy(size_t parent_imaginary, const Weight& w) const;
};

AssociatedDatum associated_datum(const BorcherdsCartanDatum& datum,
                                 const std::map<size_t, long long>& copies);

/// Copy numbers of the canonical bijection onto ordered indices: real letters
/// get 1, the occurrences of an imaginary index get 1, 2, 3, ... counted from
/// position 0 upward.
TildeWord ordered_index(const BorcherdsCartanDatum& datum, const GWord& word);

GWord erase_copies(const TildeWord& word);

bool is_ordered_index(const BorcherdsCartanDatum& datum, const TildeWord& word);

/// Distinct occurrences of the same imaginary index carry distinct copies.
bool is_generic(const BorcherdsCartanDatum& datum, const TildeWord& word);

/// One permutation per imaginary index, given as 1-based images; the diagonal
/// Omega-action relabels copies letterwise.
using OmegaPermutation = std::map<size_t, std::vector<long long>>;

TildeWord omega_apply(const BorcherdsCartanDatum& datum, const OmegaPermutation& omega,
                      const TildeWord& word);

/// Lifts a weight over g with integer root coefficients into the associated
/// model, distributing coefficients onto copies as dictated by a generic word
/// whose letters account for them.
Weight lift_weight(const AssociatedDatum& assoc, const Weight& w, const TildeWord& word);

}  // namespace gkm
