#include "perscert/simplicial.hpp"

#include <algorithm>
#include <set>

#include "perscert/errors.hpp"

namespace perscert {

namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace

std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
  for (const auto& s : simplices_) {
    if (s.empty()) throw PreconditionError("simplices must be nonempty");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!(s[i - 1] < s[i])) throw PreconditionError("simplex vertices must be strictly ascending: " + simplex_str(s));
  }
  std::sort(simplices_.begin(), simplices_.end(), SimplexOrder{});
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  for (const auto& s : simplices_)
    for (const auto& f : facets(s))
      if (!contains(f)) throw PreconditionError("complex is not face-closed: " + simplex_str(f) + " missing");
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_) {
    if (s.size() != 1) break;
    out.push_back(s[0]);
  }
  return out;
}

std::span<const Simplex> SimplicialComplex::simplices_of_dim(int dim) const {
  const auto size = static_cast<std::size_t>(dim + 1);
  auto lo = std::lower_bound(simplices_.begin(), simplices_.end(), size,
                             [](const Simplex& s, std::size_t n) { return s.size() < n; });
  auto hi = std::upper_bound(lo, simplices_.end(), size,
                             [](std::size_t n, const Simplex& s) { return n < s.size(); });
  return {lo, hi};
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
  if (it == simplices_.end() || *it != s) throw PreconditionError("simplex not in complex: " + simplex_str(s));
  return static_cast<std::size_t>(it - simplices_.begin());
}

VertexMap::VertexMap(std::vector<std::pair<Vertex, Vertex>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i - 1].first == pairs_[i].first)
      throw PreconditionError("vertex map assigns two images to vertex " + std::to_string(pairs_[i].first));
}

VertexMap VertexMap::identity_on(const std::vector<Vertex>& vertices) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(vertices.size());
  for (Vertex v : vertices) pairs.emplace_back(v, v);
  return VertexMap(std::move(pairs));
}

Vertex VertexMap::operator()(Vertex v) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair<Vertex, Vertex>{v, INT64_MIN});
  if (it == pairs_.end() || it->first != v)
    throw PreconditionError("vertex " + std::to_string(v) + " outside the domain of the vertex map");
  return it->second;
}

Simplex VertexMap::operator()(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> VertexMap::domain() const {
  std::vector<Vertex> out;
  out.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) out.push_back(a);
  return out;
}

bool VertexMap::is_injective() const {
  std::set<Vertex> seen;
  for (const auto& [a, b] : pairs_)
    if (!seen.insert(b).second) return false;
  return true;
}

}  // namespace perscert
