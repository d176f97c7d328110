#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace polymut {

// A box (i,j) of a Young diagram; rows and columns are 1-based.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;  // lexicographic, used for sorting only
  int diag() const { return row - col; }
};

// Componentwise partial order on boxes.
inline bool box_leq(Box a, Box b) { return a.row <= b.row && a.col <= b.col; }
inline bool box_lt(Box a, Box b) { return box_leq(a, b) && a != b; }

std::string box_label(Box b);

// A Young diagram: the finite down-set of N^2 determined by a partition.
// Coordinates of R^lambda are listed row-major (row 1 left to right, then
// row 2, ...); this order is used everywhere vectors index the boxes.
class YoungDiagram {
 public:
  static YoungDiagram from_partition(std::vector<int> parts);

  const std::vector<int>& partition() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }  // m1
  int cols() const { return parts_.empty() ? 0 : parts_[0]; }   // m2
  int size() const { return total_; }

  bool contains(Box b) const;
  int index_of(Box b) const;  // row-major position, 0-based
  Box box_at(int index) const;
  const std::vector<Box>& boxes() const { return boxes_; }
  std::vector<std::string> labels() const;

  // Diagonals l = i - j run from 1 - cols() to rows() - 1 and are all nonempty.
  int min_diag() const { return 1 - cols(); }
  int max_diag() const { return rows() - 1; }
  int diagonal_count() const { return rows() + cols() - 1; }
  bool has_diagonal(int l) const { return l >= min_diag() && l <= max_diag(); }
  std::vector<Box> diagonal(int l) const;  // sorted top-left to bottom-right
  Box diagonal_max(int l) const;

  std::vector<Box> corners() const;  // maximal boxes

  bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> row_offset_;  // prefix box counts per row
  std::vector<Box> boxes_;
  int total_ = 0;
};

// An up-set of a Young diagram, stored with its ambient diagram.
class UpSet {
 public:
  static UpSet empty(const YoungDiagram& d);
  static UpSet full(const YoungDiagram& d);
  // Upward closure of the given generator boxes.
  static UpSet closure(const YoungDiagram& d, const std::vector<Box>& generators);
  // Membership set taken as-is; throws if not upward closed or not inside d.
  static UpSet from_boxes(const YoungDiagram& d, const std::vector<Box>& members);

  const YoungDiagram& diagram() const { return diagram_; }
  bool contains(Box b) const;
  int size() const { return count_; }
  bool is_full() const { return count_ == diagram_.size(); }
  std::vector<Box> boxes() const;  // row-major

  // Corners of the complement lambda \ C (maximal boxes not in C).
  std::vector<Box> complement_corners() const;
  // C with one complement corner added; throws if r is not one.
  UpSet with_box(Box r) const;

  bool operator==(const UpSet& o) const;

 private:
  explicit UpSet(const YoungDiagram& d) : diagram_(d), member_(d.size(), 0) {}
  YoungDiagram diagram_;
  std::vector<char> member_;  // by row-major index
  int count_ = 0;
};

bool is_up_set(const YoungDiagram& d, const std::vector<Box>& subset);

// Deterministic corner-selection rules for building maximal flags of up-sets.
enum class CornerOrder { LexLargest, LexSmallest };

// Maximal flag empty = C_0 < C_1 < ... < C_u = lambda; each step adds one
// corner of the current complement, chosen by the given rule.
std::vector<UpSet> corner_flag(const YoungDiagram& d, CornerOrder order = CornerOrder::LexLargest);

// The sets attached to diagonal l of the rectangle R_l below r_l, for an
// up-set C: corners S of the complement inside R_l, their diagonal tails
// Sbar, minimal boxes T of C inside R_l, and their strict tails Tbar.
struct RestrictionSets {
  Box r_ell;
  std::vector<Box> R;
  std::vector<Box> S;
  std::vector<Box> Sbar;
  std::vector<Box> T;
  std::vector<Box> Tbar;
};

RestrictionSets restriction_sets(const YoungDiagram& d, const UpSet& c, int ell);

// d-vectors are listed in diagonal order d_{m1-1}, ..., d_0, ..., d_{1-m2}.
using DVec = std::vector<long long>;

void validate_dvec(const YoungDiagram& d, const DVec& dv);
long long dvec_at(const YoungDiagram& d, const DVec& dv, int ell);
DVec diagonal_lengths(const YoungDiagram& d);  // as a d-vector

// Which neighbour diagonal partners with l when deleting it.
enum class DeleteSide { Auto, Below, Left };

struct DiagonalDeletion {
  YoungDiagram diagram;  // lambda \ l
  DVec dvec;             // d \ l
  // For each box of the new diagram (row-major), the box of the old diagram
  // whose coordinate it takes.
  std::vector<Box> source;
};

// Removes diagonal l from the diagram, pairing it with diagonal l+1 (below,
// for l >= 0) or l-1 (left, for l <= 0); both diagonals must have equal
// length. At l = 0 with side Auto the below-pairing is preferred.
DiagonalDeletion delete_diagonal(const YoungDiagram& d, const DVec& dv, int ell,
                                 DeleteSide side = DeleteSide::Auto);

// Text formats: partitions "4,4,3"; up-sets "4,3;3,5" (generators, closed
// upward), or "empty" / "full".
std::vector<int> parse_partition(const std::string& text);
UpSet parse_upset(const YoungDiagram& d, const std::string& text);
DVec parse_dvec(const std::string& text);
std::string format_partition(const std::vector<int>& parts);

}  // namespace polymut
