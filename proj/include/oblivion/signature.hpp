#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oblivion {

// A finite, lexicographically sorted set of atom names. The position of an
// atom in this order is its index; world codes are built from these indices.
// Copies share the underlying storage.
class Signature {
 public:
  static constexpr std::size_t kMaxAtoms = 24;

  Signature();
  // Sorts and deduplicates. Throws SignatureError on a malformed atom name or
  // when the result exceeds kMaxAtoms.
  explicit Signature(std::vector<std::string> atoms);
  Signature(std::initializer_list<std::string_view> atoms);

  std::size_t size() const { return atoms_->size(); }
  bool empty() const { return atoms_->empty(); }
  const std::vector<std::string>& atoms() const { return *atoms_; }
  const std::string& operator[](std::size_t i) const { return (*atoms_)[i]; }

  std::optional<std::size_t> index_of(std::string_view atom) const;
  bool contains(std::string_view atom) const { return index_of(atom).has_value(); }
  bool is_subset_of(const Signature& other) const;

  // Number of worlds, 2^size().
  std::uint32_t world_count() const { return std::uint32_t{1} << size(); }

  Signature united(const Signature& other) const;
  Signature minus(const Signature& other) const;
  Signature intersected(const Signature& other) const;

  // All subsignatures, ordered by their bitmask over this signature's atoms
  // (the empty signature first, the full signature last).
  std::vector<Signature> subsets() const;

  // "{b, f, p}"
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b);
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

// Atom names follow [a-z][a-z0-9_]* and exclude the constants true/false.
bool is_valid_atom_name(std::string_view name);

// Parses a comma and/or whitespace separated atom list, e.g. "p,b" or "p b".
Signature parse_atom_list(std::string_view text);

// Bit position of atom `index` inside a world code over `size` atoms. The first
// atom of the signature is the most significant bit, so numeric code order is
// the lexicographic order of assignments (false < true).
constexpr unsigned world_bit(std::size_t index, std::size_t size) {
  return static_cast<unsigned>(size - 1 - index);
}

}  // namespace oblivion
