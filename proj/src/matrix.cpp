#include "kr/matrix.hpp"

#include <sstream>
#include <unordered_map>

#include "kr/errors.hpp"

namespace kr {

namespace {

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ValidationError, "matrix shape mismatch in " + what);
}

std::size_t poly_hash(const Poly& p) {
  std::size_t h = p.size();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) mix((static_cast<std::size_t>(v.kind) << 40) ^ (static_cast<std::size_t>(v.index) << 8) ^ e);
    mix(mpz_get_si(c.get_num_mpz_t()));
    mix(mpz_get_si(c.get_den_mpz_t()));
  }
  return h;
}

// Structured matrices such as tensor products of Koszul rows repeat a few
// polynomials many times. Entries are numbered by value so that each distinct
// product is formed once.
struct Interned {
  std::vector<const Poly*> values;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> a_rows;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> b_rows;

  std::size_t id(const Poly& p) {
    auto& bucket = by_hash[poly_hash(p)];
    for (std::size_t i : bucket)
      if (*values[i] == p) return i;
    bucket.push_back(values.size());
    values.push_back(&p);
    return values.size() - 1;
  }

  void add(const PolyMatrix& m, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& rows) {
    rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, p] : m.row(r)) rows[r].emplace_back(c, id(p));
  }

  Interned(const PolyMatrix& a, const PolyMatrix& b) {
    add(a, a_rows);
    add(b, b_rows);
  }
};

using ProductCache = std::unordered_map<std::size_t, Poly>;

PolyMatrix::Row multiply_row(const Interned& in, std::size_t r, ProductCache& cache) {
  PolyMatrix::Row out;
  const std::size_t stride = in.values.size();
  for (const auto& [k, ia] : in.a_rows[r]) {
    for (const auto& [c, ib] : in.b_rows[k]) {
      auto it = cache.find(ia * stride + ib);
      if (it == cache.end()) it = cache.emplace(ia * stride + ib, *in.values[ia] * *in.values[ib]).first;
      auto [slot, inserted] = out.try_emplace(c, it->second);
      if (!inserted) slot->second += it->second;
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t size, const Poly& scalar) {
  PolyMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, scalar);
  return m;
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.size();
  return total;
}

Poly PolyMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Poly() : it->second;
}

void PolyMatrix::set(std::size_t r, std::size_t c, const Poly& value) {
  require_shape(r < rows_ && c < cols_, "set");
  if (value.is_zero()) {
    data_[r].erase(c);
  } else {
    data_[r][c] = value;
  }
}

void PolyMatrix::add(std::size_t r, std::size_t c, const Poly& value) {
  require_shape(r < rows_ && c < cols_, "add");
  if (value.is_zero()) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

PolyMatrix PolyMatrix::negated() const {
  PolyMatrix out = *this;
  for (auto& r : out.data_)
    for (auto& [c, p] : r) p = -p;
  return out;
}

PolyMatrix PolyMatrix::reduced(const QuotientRing& ring) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, p] : data_[r]) out.set(r, c, ring.normal_form(p));
  return out;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& other) const {
  PolyMatrix out(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, p] : data_[i])
      for (std::size_t j = 0; j < other.rows_; ++j)
        for (const auto& [l, q] : other.data_[j]) out.set(i * other.rows_ + j, k * other.cols_ + l, p * q);
  return out;
}

void PolyMatrix::paste(const PolyMatrix& block, std::size_t r0, std::size_t c0) {
  require_shape(r0 + block.rows_ <= rows_ && c0 + block.cols_ <= cols_, "paste");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (const auto& [c, p] : block.data_[r]) set(r0 + r, c0 + c, p);
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ", ";
      out << at(r, c).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a.cols() == b.rows(), "multiply");
  const Interned in(a, b);
  ProductCache cache;
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (auto& [c, p] : multiply_row(in, r, cache)) out.set(r, c, p);
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a.cols() == b.rows(), "multiply");
  const auto n = static_cast<long>(a.rows());
  const Interned in(a, b);
  std::vector<PolyMatrix::Row> rows(a.rows());
#pragma omp parallel
  {
    ProductCache cache;  // one per thread
#pragma omp for schedule(dynamic)
    for (long r = 0; r < n; ++r) rows[r] = multiply_row(in, static_cast<std::size_t>(r), cache);
  }
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, p] : rows[r]) out.set(r, c, p);
  return out;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  require_shape(a.rows() == b.rows() && c.rows() == d.rows() && a.cols() == c.cols() && b.cols() == d.cols(),
                "block2x2");
  PolyMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
  out.paste(a, 0, 0);
  out.paste(b, 0, a.cols());
  out.paste(c, a.rows(), 0);
  out.paste(d, a.rows(), a.cols());
  return out;
}

}  // namespace kr
