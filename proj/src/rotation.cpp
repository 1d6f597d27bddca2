#include "qcube/rotation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qcube {

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  throw std::invalid_argument("bad axis");
}

Axis axis_from_letter(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
  }
  throw std::invalid_argument(std::string("bad axis letter: ") + c);
}

Perm8 identity_perm() {
  Perm8 p{};
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

Perm8 compose(const Perm8& a, const Perm8& b) {
  Perm8 r{};
  for (int v = 1; v <= 8; ++v) r.image[v - 1] = a(b(v));
  return r;
}

Perm8 inverse(const Perm8& p) {
  Perm8 r{};
  for (int v = 1; v <= 8; ++v) r.image[p(v) - 1] = v;
  return r;
}

int perm_order(const Perm8& p) {
  Perm8 acc = p;
  int n = 1;
  while (!(acc == identity_perm())) {
    acc = compose(p, acc);
    ++n;
  }
  return n;
}

Perm8 perm_from_cycles(std::string_view text) {
  std::array<int, 8> image{};
  std::array<bool, 8> seen{};
  std::vector<int> cycle;
  bool open = false;
  auto close_cycle = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      image[from - 1] = to;
    }
    cycle.clear();
  };
  for (char c : text) {
    if (c == '(') {
      if (open) throw std::invalid_argument("nested cycle");
      open = true;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unmatched ')'");
      close_cycle();
      open = false;
    } else if (c >= '1' && c <= '8') {
      if (!open) throw std::invalid_argument("digit outside cycle");
      int v = c - '0';
      if (seen[v - 1]) throw std::invalid_argument("repeated vertex in cycles");
      seen[v - 1] = true;
      cycle.push_back(v);
    } else if (c == ' ' || c == ',') {
      continue;
    } else {
      throw std::invalid_argument(std::string("bad cycle character: ") + c);
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  for (int v = 1; v <= 8; ++v)
    if (!seen[v - 1]) image[v - 1] = v;
  return Perm8{image};
}

std::string cycle_notation(const Perm8& p) {
  std::string out;
  std::array<bool, 8> done{};
  for (int v = 1; v <= 8; ++v) {
    if (done[v - 1] || p(v) == v) continue;
    out += '(';
    int w = v;
    do {
      done[w - 1] = true;
      out += static_cast<char>('0' + w);
      w = p(w);
    } while (w != v);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Mat3 Mat3::identity() {
  return Mat3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

Mat3 mat_transpose(const Mat3& a) {
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  return r;
}

int mat_det(const Mat3& a) {
  const auto& m = a.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<int, 3> mat_apply(const Mat3& a, const std::array<int, 3>& v) {
  std::array<int, 3> r{};
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = a.m[i][0] * v[0] + a.m[i][1] * v[1] + a.m[i][2] * v[2];
  return r;
}

int mat_trace(const Mat3& a) { return a.m[0][0] + a.m[1][1] + a.m[2][2]; }

Mat3 matrix_for_perm(const Perm8& p) {
  // Columns solved from three independent vertices:
  //   v2=(1,1,1), v1=(1,-1,1), v4=(-1,-1,1).
  auto img = [&](int v) { return vertex_coords(OnticState{p(v)}); };
  const auto w2 = img(2), w1 = img(1), w4 = img(4);
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i) {
    int two_cy = w2[i] - w1[i];
    int two_cx = w1[i] - w4[i];
    if (two_cy % 2 != 0 || two_cx % 2 != 0)
      throw std::invalid_argument("permutation is not a cube rotation");
    r.m[i][1] = two_cy / 2;
    r.m[i][0] = two_cx / 2;
    r.m[i][2] = w2[i] - r.m[i][0] - r.m[i][1];
  }
  for (int v = 1; v <= 8; ++v)
    if (mat_apply(r, vertex_coords(OnticState{v})) != vertex_coords(OnticState{p(v)}))
      throw std::invalid_argument("permutation is not a cube rotation");
  if (mat_det(r) != 1) throw std::invalid_argument("permutation is orientation-reversing");
  return r;
}

namespace {

std::string axis_vector_text(const std::array<int, 3>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += ',';
    s += std::to_string(n[i]);
  }
  s += ')';
  return s;
}

// First nonzero component made positive.
std::array<int, 3> normalize_axis(std::array<int, 3> n) {
  for (int c : n) {
    if (c > 0) break;
    if (c < 0) {
      for (auto& x : n) x = -x;
      break;
    }
  }
  return n;
}

std::optional<char> coordinate_axis_letter(const std::array<int, 3>& n) {
  int nonzero = -1;
  for (int i = 0; i < 3; ++i) {
    if (n[i] != 0) {
      if (nonzero >= 0) return std::nullopt;
      nonzero = i;
    }
  }
  return "xyz"[nonzero];
}

}  // namespace

std::string classify_name(const Mat3& m) {
  const int tr = mat_trace(m);
  if (tr == 3) return "id";

  // Antisymmetric part gives sin(theta) * axis; zero only for half turns.
  std::array<int, 3> axial = {m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)};

  if (tr == -1) {  // half turn; axis from any nonzero column of m + I
    std::array<int, 3> n{};
    for (std::size_t col = 0; col < 3; ++col) {
      n = {m(0, col), m(1, col), m(2, col)};
      n[col] += 1;
      if (n != std::array<int, 3>{0, 0, 0}) break;
    }
    n = normalize_axis(n);
    for (auto& c : n) c /= std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
    if (auto letter = coordinate_axis_letter(n)) return std::string("R") + *letter + "180";
    return "R" + axis_vector_text(n) + "180";
  }

  std::array<int, 3> n = normalize_axis(axial);
  bool positive = (n == axial);
  const char* sign = positive ? "+" : "-";
  if (tr == 1) {  // quarter turn about a coordinate axis
    auto letter = coordinate_axis_letter(n);
    if (!letter) throw std::invalid_argument("quarter turn off a coordinate axis");
    return std::string("R") + *letter + sign + "90";
  }
  if (tr == 0)  // third turn about a vertex diagonal
    return "R" + axis_vector_text(n) + sign + "120";
  throw std::invalid_argument("matrix is not a cube rotation");
}

namespace {

Rotation make_rotation(Perm8 p) {
  Mat3 m = matrix_for_perm(p);
  std::string name = classify_name(m);
  return Rotation{p, m, std::move(name)};
}

std::string rotation_kind(const Mat3& m) {
  switch (mat_trace(m)) {
    case 3: return "identity";
    case 1: return "face-90";
    case 0: return "vertex-120";
    case -1: {
      int axes = 0;
      for (int i = 0; i < 3; ++i) axes += (m(i, i) == 1);
      return axes == 1 ? "face-180" : "edge-180";
    }
  }
  throw std::invalid_argument("matrix is not a cube rotation");
}

}  // namespace

Rotation rotation_generator(Axis axis) {
  switch (axis) {
    case Axis::X: return make_rotation(perm_from_cycles("(1562)(3487)"));
    case Axis::Y: return make_rotation(perm_from_cycles("(1584)(2673)"));
    case Axis::Z: return make_rotation(perm_from_cycles("(1234)(5678)"));
  }
  throw std::invalid_argument("bad axis");
}

Rotation compose(const Rotation& a, const Rotation& b) {
  Rotation r{compose(a.perm, b.perm), mat_mul(a.matrix, b.matrix), ""};
  r.name = classify_name(r.matrix);
  return r;
}

Rotation inverse(const Rotation& a) {
  Rotation r{inverse(a.perm), mat_transpose(a.matrix), ""};
  r.name = classify_name(r.matrix);
  return r;
}

Rotation identity_rotation() { return Rotation{identity_perm(), Mat3::identity(), "id"}; }

bool is_valid_rotation(const Rotation& r) {
  if (mat_mul(r.matrix, mat_transpose(r.matrix)) != Mat3::identity()) return false;
  if (mat_det(r.matrix) != 1) return false;
  for (int v = 1; v <= 8; ++v) {
    if (r.perm(v) < 1 || r.perm(v) > 8) return false;
    if (mat_apply(r.matrix, vertex_coords(OnticState{v})) !=
        vertex_coords(OnticState{r.perm(v)}))
      return false;
  }
  return true;
}

StochasticMatrix8 stochastic_matrix(const Rotation& r) {
  std::array<Vec8, 8> rows{};
  for (int v = 1; v <= 8; ++v) rows[r.perm(v) - 1][v - 1] = 1;
  return StochasticMatrix8(rows);
}

std::array<int, 4> diagonal_action(const Perm8& p) {
  static constexpr std::array<int, 8> kPairOf = {0, 1, 2, 3, 2, 3, 0, 1};  // by vertex-1
  std::array<int, 4> r{};
  static constexpr std::array<int, 4> kRep = {1, 2, 3, 4};
  for (int k = 0; k < 4; ++k) r[k] = kPairOf[p(kRep[k]) - 1];
  return r;
}

RotationGroup::RotationGroup() {
  const std::array<Rotation, 3> gens = {rotation_generator(Axis::X), rotation_generator(Axis::Y),
                                        rotation_generator(Axis::Z)};
  elements_.push_back(identity_rotation());
  parent_.push_back(0);
  parent_gen_.push_back(Axis::X);
  for (std::size_t at = 0; at < elements_.size(); ++at) {
    for (std::size_t g = 0; g < 3; ++g) {
      Rotation next = compose(gens[g], elements_[at]);
      bool known = false;
      for (const auto& e : elements_)
        if (e.perm == next.perm) {
          known = true;
          break;
        }
      if (!known) {
        elements_.push_back(std::move(next));
        parent_.push_back(at);
        parent_gen_.push_back(static_cast<Axis>(g));
      }
    }
  }

  const std::size_t n = elements_.size();
  cayley_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cayley_[a][b] = index_of(compose(elements_[a].perm, elements_[b].perm));
  inverse_.resize(n);
  order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_of(inverse(elements_[a].perm));
    order_[a] = perm_order(elements_[a].perm);
  }

  // Conjugacy classes by brute-force conjugation, presented in the fixed
  // order identity, face-90, face-180, vertex-120, edge-180.
  std::vector<bool> assigned(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    ConjClass cls;
    cls.kind = rotation_kind(elements_[a].matrix);
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t conj = cayley_[cayley_[g][a]][inverse_[g]];
      if (!assigned[conj]) {
        assigned[conj] = true;
        cls.members.push_back(conj);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
  auto kind_rank = [](const std::string& kind) {
    if (kind == "identity") return 0;
    if (kind == "face-90") return 1;
    if (kind == "face-180") return 2;
    if (kind == "vertex-120") return 3;
    return 4;
  };
  std::stable_sort(classes_.begin(), classes_.end(),
                   [&](const ConjClass& a, const ConjClass& b) {
                     return kind_rank(a.kind) < kind_rank(b.kind);
                   });
}

const RotationGroup& RotationGroup::standard() {
  static const RotationGroup group;
  return group;
}

std::optional<std::size_t> RotationGroup::find(const Perm8& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].perm == p) return i;
  return std::nullopt;
}

std::size_t RotationGroup::index_of(const Perm8& p) const {
  if (auto i = find(p)) return *i;
  throw std::invalid_argument("permutation not in the rotation group");
}

}  // namespace qcube
