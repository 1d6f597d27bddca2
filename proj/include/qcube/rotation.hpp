#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcube/ontic.hpp"

namespace qcube {

enum class Axis { X, Y, Z };

char axis_letter(Axis a);
Axis axis_from_letter(char c);  // throws std::invalid_argument

// Permutation of the vertex labels 1..8; image[i-1] is the image of vertex i.
struct Perm8 {
  std::array<int, 8> image;

  int operator()(int vertex) const { return image[vertex - 1]; }

  friend bool operator==(const Perm8&, const Perm8&) = default;
};

Perm8 identity_perm();
Perm8 compose(const Perm8& a, const Perm8& b);  // a after b
Perm8 inverse(const Perm8& p);
int perm_order(const Perm8& p);

// Compact cycle notation on 1..8, e.g. "(1562)(3487)"; fixed points omitted,
// identity prints as "()". Spaces inside cycles are tolerated when parsing.
Perm8 perm_from_cycles(std::string_view text);
std::string cycle_notation(const Perm8& p);

// 3x3 signed integer matrix acting on column vectors.
struct Mat3 {
  std::array<std::array<int, 3>, 3> m;

  static Mat3 identity();
  int operator()(std::size_t row, std::size_t col) const { return m[row][col]; }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 mat_transpose(const Mat3& a);
int mat_det(const Mat3& a);
std::array<int, 3> mat_apply(const Mat3& a, const std::array<int, 3>& v);
int mat_trace(const Mat3& a);

// A cube rotation: vertex permutation plus the SO(3) matrix realizing it on
// the vertex chart. The 8x8 stochastic form is derived on demand.
struct Rotation {
  Perm8 perm;
  Mat3 matrix;
  std::string name;

  friend bool operator==(const Rotation& a, const Rotation& b) {
    return a.perm == b.perm && a.matrix == b.matrix;
  }
};

// The unique signed integer matrix with matrix * v_i = v_{perm(i)} for every
// vertex; throws std::invalid_argument when the permutation is not a rotation.
Mat3 matrix_for_perm(const Perm8& p);

// Canonical label from axis/angle classification: "id", "Rz+90", "Rx180",
// "R(1,1,1)+120", "R(1,1,0)180".
std::string classify_name(const Mat3& m);

// Quarter turn about the axis; perms are the fixed cycle triple
// (1562)(3487), (1584)(2673), (1234)(5678) for x, y, z.
Rotation rotation_generator(Axis axis);

Rotation compose(const Rotation& a, const Rotation& b);  // apply b first, then a
Rotation inverse(const Rotation& a);
Rotation identity_rotation();

// Orthogonal, det +1, entries in {-1,0,1}, and perm/matrix consistent on the
// vertex chart.
bool is_valid_rotation(const Rotation& r);

// 8x8 permutation matrix of the vertex action.
StochasticMatrix8 stochastic_matrix(const Rotation& r);

// Induced permutation of the four antipodal pairs (1,7),(2,8),(3,5),(4,6);
// result[k] is the image position of pair k (0-based).
std::array<int, 4> diagonal_action(const Perm8& p);

// Closure of the three generators: 24 elements, identity first, BFS order.
class RotationGroup {
 public:
  RotationGroup();

  // Shared immutable instance.
  static const RotationGroup& standard();

  std::size_t size() const { return elements_.size(); }
  const Rotation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Rotation>& elements() const { return elements_; }

  std::optional<std::size_t> find(const Perm8& p) const;
  std::size_t index_of(const Perm8& p) const;  // throws if absent

  std::size_t compose_index(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
  std::size_t inverse_index(std::size_t a) const { return inverse_[a]; }
  int element_order(std::size_t a) const { return order_[a]; }

  // BFS spanning tree breadcrumbs; element i != 0 satisfies
  // element(i) = generator(tree_generator(i)) o element(tree_parent(i)).
  std::size_t tree_parent(std::size_t i) const { return parent_[i]; }
  Axis tree_generator(std::size_t i) const { return parent_gen_[i]; }

  struct ConjClass {
    std::string kind;  // identity, face-90, face-180, vertex-120, edge-180
    std::vector<std::size_t> members;
  };
  // Fixed presentation order: identity, face-90, face-180, vertex-120, edge-180.
  const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }

 private:
  std::vector<Rotation> elements_;
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::vector<int> order_;
  std::vector<std::size_t> parent_;
  std::vector<Axis> parent_gen_;
  std::vector<ConjClass> classes_;
};

// BFS closure from the three quoted generator cycles.
inline const RotationGroup& generate_group() { return RotationGroup::standard(); }

}  // namespace qcube
