#include "rcl/perm.hpp"

#include <numeric>

namespace rcl {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::invalid_permutation: return "invalid_permutation";
    case Errc::group_too_large: return "group_too_large";
    case Errc::not_a_subgroup: return "not_a_subgroup";
    case Errc::parent_mismatch: return "parent_mismatch";
    case Errc::invalid_root_pair: return "invalid_root_pair";
    case Errc::invalid_extension_pair: return "invalid_extension_pair";
    case Errc::not_an_extension: return "not_an_extension";
    case Errc::bad_parameter: return "bad_parameter";
    case Errc::bad_ordering: return "bad_ordering";
    case Errc::degree_too_small: return "degree_too_small";
    case Errc::parse_error: return "parse_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Perm Perm::identity(int degree) {
  if (degree < 0) fail(Errc::bad_parameter, "negative degree");
  std::vector<int32_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<int32_t> images) {
  const auto n = images.size();
  std::vector<bool> seen(n, false);
  for (int32_t v : images) {
    if (v < 0 || static_cast<size_t>(v) >= n || seen[static_cast<size_t>(v)])
      fail(Errc::invalid_permutation, "image sequence is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
  return Perm(std::move(images));
}

Perm Perm::from_one_based(const std::vector<int64_t>& images) {
  std::vector<int32_t> img;
  img.reserve(images.size());
  for (int64_t v : images) {
    if (v < 1 || v > static_cast<int64_t>(images.size()))
      fail(Errc::invalid_permutation, "1-based image out of range");
    img.push_back(static_cast<int32_t>(v - 1));
  }
  return from_images(std::move(img));
}

std::vector<int64_t> Perm::one_based() const {
  std::vector<int64_t> out;
  out.reserve(img_.size());
  for (int32_t v : img_) out.push_back(v + 1);
  return out;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int32_t>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int32_t> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[static_cast<size_t>(img_[i])] = static_cast<int32_t>(i);
  return Perm(std::move(inv));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) fail(Errc::degree_mismatch, "compose: degree mismatch");
  std::vector<int32_t> img(p.img_.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = p.img_[static_cast<size_t>(q.img_[i])];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& g, const Perm& x) { return compose(compose(g, x), g.inverse()); }

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> used(img_.size(), false);
  for (size_t start = 0; start < img_.size(); ++start) {
    if (used[start] || img_[start] == static_cast<int32_t>(start)) continue;
    out += '(';
    size_t i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      used[i] = true;
      i = static_cast<size_t>(img_[i]);
      first = false;
    } while (i != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (int32_t v : p.images()) {
    h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace rcl
