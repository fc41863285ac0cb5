#include "oblivion/signature.hpp"

#include <algorithm>
#include <cctype>

#include "oblivion/error.hpp"

namespace oblivion {

namespace {

const std::shared_ptr<const std::vector<std::string>>& EmptyAtoms() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return name != "true" && name != "false";
}

Signature::Signature() : atoms_(EmptyAtoms()) {}

Signature::Signature(std::vector<std::string> atoms) {
  for (const auto& a : atoms) {
    if (!is_valid_atom_name(a)) throw SignatureError("invalid atom name '" + a + "'");
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > kMaxAtoms) {
    throw CapExceededError("signature has " + std::to_string(atoms.size()) +
                            " atoms; the cap is " + std::to_string(kMaxAtoms));
  }
  atoms_ = atoms.empty() ? EmptyAtoms()
                         : std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

Signature::Signature(std::initializer_list<std::string_view> atoms)
    : Signature(std::vector<std::string>(atoms.begin(), atoms.end())) {}

std::optional<std::size_t> Signature::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), atom);
  if (it == atoms_->end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_->begin());
}

bool Signature::is_subset_of(const Signature& other) const {
  return std::includes(other.atoms_->begin(), other.atoms_->end(), atoms_->begin(),
                       atoms_->end());
}

Signature Signature::united(const Signature& other) const {
  std::vector<std::string> out;
  std::set_union(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                 other.atoms_->end(), std::back_inserter(out));
  return Signature(std::move(out));
}

Signature Signature::minus(const Signature& other) const {
  std::vector<std::string> out;
  std::set_difference(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                      other.atoms_->end(), std::back_inserter(out));
  return Signature(std::move(out));
}

Signature Signature::intersected(const Signature& other) const {
  std::vector<std::string> out;
  std::set_intersection(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                        other.atoms_->end(), std::back_inserter(out));
  return Signature(std::move(out));
}

std::vector<Signature> Signature::subsets() const {
  std::vector<Signature> out;
  const std::uint32_t n = world_count();
  out.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) atoms.push_back((*atoms_)[i]);
    }
    out.emplace_back(std::move(atoms));
  }
  return out;
}

std::string Signature::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += (*atoms_)[i];
  }
  return out + "}";
}

bool operator==(const Signature& a, const Signature& b) {
  return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
}

Signature parse_atom_list(std::string_view text) {
  std::vector<std::string> atoms;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) atoms.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return Signature(std::move(atoms));
}

}  // namespace oblivion
