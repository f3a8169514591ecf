#include "kflag/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace kflag {

namespace {

std::string entry_name(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

/// Solves M x = rhs over the rationals by Gaussian elimination.
/// Returns false when M is singular.
bool solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                    std::vector<Rational>& out) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  return true;
}

/// Leading principal minors of a symmetric rational matrix.
std::vector<Rational> leading_minors(const std::vector<std::vector<Rational>>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<Rational> minors;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = s[i][j];
    // determinant by elimination
    Rational det = 1;
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int pivot = -1;
      for (int row = col; row < k; ++row) {
        if (m[row][col] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) {
        singular = true;
        break;
      }
      if (pivot != col) {
        std::swap(m[col], m[pivot]);
        det = -det;
      }
      det *= m[col][col];
      for (int row = col + 1; row < k; ++row) {
        if (m[row][col] == 0) continue;
        Rational f = m[row][col] / m[col][col];
        for (int c = col; c < k; ++c) m[row][c] -= f * m[col][c];
      }
    }
    minors.push_back(singular ? Rational(0) : det);
  }
  return minors;
}

/// Finds positive rationals d_i with d_i a_ij = d_j a_ji, one connected
/// component at a time. Returns false when the matrix is not symmetrizable.
bool symmetrize(const CartanMatrix& a, std::vector<Rational>& d) {
  const int n = a.rank();
  d.assign(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a.entries[i][j] == 0) continue;
        Rational want = d[i] * Rational(a.entries[i][j]) / Rational(a.entries[j][i]);
        if (d[j] == 0) {
          d[j] = want;
          queue.push_back(j);
        } else if (d[j] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::int64_t Weight::pairing(int i) const {
  if (i < 1 || i > rank())
    throw validation_error("weight pairing index " + std::to_string(i) + " out of range 1.." +
                           std::to_string(rank()));
  return coords_[i - 1];
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (rank() != o.rank()) throw validation_error("weight rank mismatch in addition");
  for (int k = 0; k < rank(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (rank() != o.rank()) throw validation_error("weight rank mismatch in subtraction");
  for (int k = 0; k < rank(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Weight Weight::operator-() const {
  std::vector<std::int64_t> c(coords_);
  for (auto& x : c) x = -x;
  return Weight(std::move(c));
}

Weight Weight::operator*(std::int64_t c) const {
  std::vector<std::int64_t> out(coords_);
  for (auto& x : out) x *= c;
  return Weight(std::move(out));
}

void CartanMatrix::validate() const {
  const int n = rank();
  if (n == 0) throw validation_error("Cartan matrix is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      throw validation_error("Cartan matrix row " + std::to_string(i + 1) + " has " +
                             std::to_string(entries[i].size()) + " entries, expected " +
                             std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (entries[i][i] != 2)
      throw validation_error("Cartan matrix entry " + entry_name(i + 1, i + 1) +
                             " must be 2, found " + std::to_string(entries[i][i]));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0)
        throw validation_error("Cartan matrix entry " + entry_name(i + 1, j + 1) +
                               " must be non-positive, found " + std::to_string(entries[i][j]));
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw validation_error("Cartan matrix entries " + entry_name(i + 1, j + 1) + " and " +
                               entry_name(j + 1, i + 1) + " must vanish together");
    }
  }
}

namespace {

CartanMatrix simple_type(char family, int n) {
  auto chain = [](int size) {
    CartanMatrix m;
    m.entries.assign(size, std::vector<std::int64_t>(size, 0));
    for (int i = 0; i < size; ++i) m.entries[i][i] = 2;
    for (int i = 0; i + 1 < size; ++i) {
      m.entries[i][i + 1] = -1;
      m.entries[i + 1][i] = -1;
    }
    return m;
  };
  switch (family) {
    case 'A': {
      if (n < 1) throw validation_error("type A requires rank >= 1");
      return chain(n);
    }
    case 'B': {
      if (n < 2) throw validation_error("type B requires rank >= 2");
      CartanMatrix m = chain(n);
      m.entries[n - 1][n - 2] = -2;
      return m;
    }
    case 'C': {
      if (n < 2) throw validation_error("type C requires rank >= 2");
      CartanMatrix m = chain(n);
      m.entries[n - 2][n - 1] = -2;
      return m;
    }
    case 'D': {
      if (n < 3) throw validation_error("type D requires rank >= 3");
      CartanMatrix m = chain(n - 1);
      for (auto& row : m.entries) row.push_back(0);
      m.entries.emplace_back(n, 0);
      m.entries[n - 1][n - 1] = 2;
      m.entries[n - 3][n - 1] = -1;
      m.entries[n - 1][n - 3] = -1;
      return m;
    }
    case 'E': {
      if (n < 6 || n > 8) throw validation_error("type E requires rank 6, 7 or 8");
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      CartanMatrix m;
      m.entries.assign(n, std::vector<std::int64_t>(n, 0));
      for (int i = 0; i < n; ++i) m.entries[i][i] = 2;
      auto join = [&m](int i, int j) {
        m.entries[i - 1][j - 1] = -1;
        m.entries[j - 1][i - 1] = -1;
      };
      join(1, 3);
      join(2, 4);
      for (int i = 3; i < n; ++i) join(i, i + 1);
      return m;
    }
    case 'F': {
      if (n != 4) throw validation_error("type F requires rank 4");
      CartanMatrix m = chain(4);
      m.entries[2][1] = -2;
      return m;
    }
    case 'G': {
      if (n != 2) throw validation_error("type G requires rank 2");
      CartanMatrix m;
      m.entries = {{2, -1}, {-3, 2}};
      return m;
    }
    default:
      throw validation_error(std::string("unknown type family '") + family + "'");
  }
}

CartanMatrix parse_simple(const std::string& part) {
  if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
    throw validation_error("cannot parse type name '" + part + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
  for (std::size_t k = 1; k < part.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(part[k])))
      throw validation_error("cannot parse type name '" + part + "'");
  int n = std::stoi(part.substr(1));
  return simple_type(family, n);
}

}  // namespace

CartanMatrix CartanMatrix::of_type(const std::string& name) {
  std::vector<CartanMatrix> blocks;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t next = name.find('x', pos);
    std::string part = name.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.empty()) throw validation_error("cannot parse type name '" + name + "'");
    blocks.push_back(parse_simple(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  int total = 0;
  for (const auto& b : blocks) total += b.rank();
  CartanMatrix m;
  m.entries.assign(total, std::vector<std::int64_t>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j) m.entries[off + i][off + j] = b.entries[i][j];
    off += b.rank();
  }
  return m;
}

RootSystem::RootSystem(CartanMatrix m) : cartan_(std::move(m)) {
  cartan_.validate();
  const int n = rank();
  rho_ = Weight(std::vector<std::int64_t>(n, 1));

  std::vector<Rational> d;
  finite_ = false;
  if (symmetrize(cartan_, d)) {
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i][j] = d[i] * Rational(cartan_.entries[i][j]);
    for (int i = 0; i < n && symmetric; ++i)
      for (int j = 0; j < n; ++j)
        if (s[i][j] != s[j][i]) {
          symmetric = false;
          break;
        }
    if (symmetric) {
      auto minors = leading_minors(s);
      finite_ = std::all_of(minors.begin(), minors.end(), [](const Rational& r) { return r > 0; });
    }
  }

  if (!finite_) return;

  // Orbit closure from the simple roots, tracking fundamental-weight and
  // simple-root coordinates together; a reflected root is kept while its
  // simple-root coordinates stay non-negative.
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::pair<Weight, std::vector<std::int64_t>>> queue;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i - 1] = 1;
    seen.insert(c);
    queue.emplace_back(simple_root(i), std::move(c));
  }
  std::vector<std::pair<std::vector<std::int64_t>, Weight>> collected;
  while (!queue.empty()) {
    auto [w, c] = queue.front();
    queue.pop_front();
    collected.emplace_back(c, w);
    for (int i = 1; i <= n; ++i) {
      Weight rw = reflect(i, w);
      std::vector<std::int64_t> rc(c);
      rc[i - 1] -= w.pairing(i);
      if (std::any_of(rc.begin(), rc.end(), [](std::int64_t x) { return x < 0; })) continue;
      if (seen.insert(rc).second) queue.emplace_back(std::move(rw), std::move(rc));
    }
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    auto height = [](const std::vector<std::int64_t>& c) {
      return std::accumulate(c.begin(), c.end(), std::int64_t{0});
    };
    std::int64_t ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  for (auto& [c, w] : collected) {
    pos_root_set_.insert(w);
    pos_roots_.push_back(std::move(w));
    pos_root_coords_.push_back(std::move(c));
  }
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank())
    throw validation_error("simple root index " + std::to_string(i) + " out of range 1.." +
                           std::to_string(rank()));
}

Weight RootSystem::simple_root(int i) const {
  check_index(i);
  std::vector<std::int64_t> c(rank());
  for (int k = 0; k < rank(); ++k) c[k] = cartan_.entries[k][i - 1];
  return Weight(std::move(c));
}

Weight RootSystem::fundamental_weight(int i) const {
  check_index(i);
  std::vector<std::int64_t> c(rank(), 0);
  c[i - 1] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  check_index(i);
  if (w.rank() != rank()) throw validation_error("weight rank does not match root system rank");
  return w - simple_root(i) * w.pairing(i);
}

const std::vector<Weight>& RootSystem::positive_roots() const {
  if (!finite_)
    throw unsupported_error("positive roots are only enumerated for finite-type Cartan matrices");
  return pos_roots_;
}

const std::vector<std::vector<std::int64_t>>& RootSystem::positive_root_coords() const {
  if (!finite_)
    throw unsupported_error("positive roots are only enumerated for finite-type Cartan matrices");
  return pos_root_coords_;
}

bool RootSystem::is_positive_root(const Weight& w) const {
  if (!finite_)
    throw unsupported_error("positive roots are only enumerated for finite-type Cartan matrices");
  return pos_root_set_.count(w) > 0;
}

RootCoords RootSystem::to_root_coords(const Weight& w) const {
  if (!finite_)
    throw unsupported_error("simple-root coordinates require a finite-type Cartan matrix");
  if (w.rank() != rank()) throw validation_error("weight rank does not match root system rank");
  const int n = rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = Rational(w.coords()[i]);
    for (int j = 0; j < n; ++j) m[i][j] = Rational(cartan_.entries[i][j]);
  }
  RootCoords out;
  if (!solve_rational(std::move(m), std::move(rhs), out.coords))
    throw unsupported_error("Cartan matrix is singular");
  out.integral = std::all_of(out.coords.begin(), out.coords.end(),
                             [](const Rational& r) { return denominator(r) == 1; });
  return out;
}

}  // namespace kflag
