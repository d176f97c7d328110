#include "polymut/young.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polymut {

std::string box_label(Box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

YoungDiagram YoungDiagram::from_partition(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition must be nonempty");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
  YoungDiagram d;
  d.parts_ = std::move(parts);
  d.row_offset_.resize(d.parts_.size() + 1, 0);
  for (size_t i = 0; i < d.parts_.size(); ++i)
    d.row_offset_[i + 1] = d.row_offset_[i] + d.parts_[i];
  d.total_ = d.row_offset_.back();
  d.boxes_.reserve(d.total_);
  for (int i = 1; i <= d.rows(); ++i)
    for (int j = 1; j <= d.parts_[i - 1]; ++j) d.boxes_.push_back({i, j});
  return d;
}

bool YoungDiagram::contains(Box b) const {
  return b.row >= 1 && b.row <= rows() && b.col >= 1 && b.col <= parts_[b.row - 1];
}

int YoungDiagram::index_of(Box b) const {
  if (!contains(b)) throw std::out_of_range("box " + box_label(b) + " not in diagram");
  return row_offset_[b.row - 1] + (b.col - 1);
}

Box YoungDiagram::box_at(int index) const {
  if (index < 0 || index >= total_) throw std::out_of_range("box index out of range");
  return boxes_[index];
}

std::vector<std::string> YoungDiagram::labels() const {
  std::vector<std::string> out;
  out.reserve(total_);
  for (const Box& b : boxes_) out.push_back(box_label(b));
  return out;
}

std::vector<Box> YoungDiagram::diagonal(int l) const {
  if (!has_diagonal(l)) throw std::out_of_range("diagonal " + std::to_string(l) + " out of range");
  std::vector<Box> out;
  for (int i = std::max(1, l + 1);; ++i) {
    Box b{i, i - l};
    if (!contains(b)) break;
    out.push_back(b);
  }
  return out;
}

Box YoungDiagram::diagonal_max(int l) const { return diagonal(l).back(); }

std::vector<Box> YoungDiagram::corners() const {
  std::vector<Box> out;
  for (int i = 1; i <= rows(); ++i) {
    int len = parts_[i - 1];
    bool last_row = (i == rows()) || (parts_[i] < len);
    if (last_row) out.push_back({i, len});
  }
  return out;
}

UpSet UpSet::empty(const YoungDiagram& d) { return UpSet(d); }

UpSet UpSet::full(const YoungDiagram& d) {
  UpSet u(d);
  std::fill(u.member_.begin(), u.member_.end(), 1);
  u.count_ = d.size();
  return u;
}

UpSet UpSet::closure(const YoungDiagram& d, const std::vector<Box>& generators) {
  UpSet u(d);
  for (const Box& g : generators) {
    if (!d.contains(g))
      throw std::invalid_argument("up-set generator " + box_label(g) + " not in diagram");
    for (const Box& b : d.boxes()) {
      if (box_leq(g, b)) {
        int idx = d.index_of(b);
        if (!u.member_[idx]) {
          u.member_[idx] = 1;
          ++u.count_;
        }
      }
    }
  }
  return u;
}

UpSet UpSet::from_boxes(const YoungDiagram& d, const std::vector<Box>& members) {
  if (!is_up_set(d, members)) throw std::invalid_argument("set of boxes is not an up-set");
  UpSet u(d);
  for (const Box& b : members) {
    int idx = d.index_of(b);
    if (!u.member_[idx]) {
      u.member_[idx] = 1;
      ++u.count_;
    }
  }
  return u;
}

bool UpSet::contains(Box b) const {
  return diagram_.contains(b) && member_[diagram_.index_of(b)] != 0;
}

std::vector<Box> UpSet::boxes() const {
  std::vector<Box> out;
  for (int i = 0; i < diagram_.size(); ++i)
    if (member_[i]) out.push_back(diagram_.box_at(i));
  return out;
}

std::vector<Box> UpSet::complement_corners() const {
  std::vector<Box> out;
  for (const Box& b : diagram_.boxes()) {
    if (contains(b)) continue;
    Box right{b.row, b.col + 1}, down{b.row + 1, b.col};
    bool right_free = diagram_.contains(right) && !contains(right);
    bool down_free = diagram_.contains(down) && !contains(down);
    if (!right_free && !down_free) out.push_back(b);
  }
  return out;
}

UpSet UpSet::with_box(Box r) const {
  auto corners = complement_corners();
  if (std::find(corners.begin(), corners.end(), r) == corners.end())
    throw std::invalid_argument("box " + box_label(r) + " is not a corner of the complement");
  UpSet u = *this;
  u.member_[diagram_.index_of(r)] = 1;
  ++u.count_;
  return u;
}

bool UpSet::operator==(const UpSet& o) const {
  return diagram_ == o.diagram_ && member_ == o.member_;
}

bool is_up_set(const YoungDiagram& d, const std::vector<Box>& subset) {
  std::vector<char> in(d.size(), 0);
  for (const Box& b : subset) {
    if (!d.contains(b)) throw std::invalid_argument("box " + box_label(b) + " not in diagram");
    in[d.index_of(b)] = 1;
  }
  for (const Box& b : d.boxes()) {
    if (!in[d.index_of(b)]) continue;
    Box right{b.row, b.col + 1}, down{b.row + 1, b.col};
    if (d.contains(right) && !in[d.index_of(right)]) return false;
    if (d.contains(down) && !in[d.index_of(down)]) return false;
  }
  return true;
}

std::vector<UpSet> corner_flag(const YoungDiagram& d, CornerOrder order) {
  std::vector<UpSet> flag;
  UpSet c = UpSet::empty(d);
  flag.push_back(c);
  while (!c.is_full()) {
    auto corners = c.complement_corners();
    Box pick = corners.front();
    for (const Box& b : corners) {
      bool better = (order == CornerOrder::LexLargest) ? (pick < b) : (b < pick);
      if (better) pick = b;
    }
    c = c.with_box(pick);
    flag.push_back(c);
  }
  return flag;
}

RestrictionSets restriction_sets(const YoungDiagram& d, const UpSet& c, int ell) {
  if (!(c.diagram() == d)) throw std::invalid_argument("up-set belongs to a different diagram");
  if (!d.has_diagonal(ell)) throw std::out_of_range("diagonal out of range");
  RestrictionSets rs;
  rs.r_ell = d.diagonal_max(ell);
  for (const Box& b : d.boxes())
    if (box_leq(b, rs.r_ell)) rs.R.push_back(b);

  auto maximal_of = [](const std::vector<Box>& set) {
    std::vector<Box> out;
    for (const Box& b : set) {
      bool maximal = true;
      for (const Box& o : set)
        if (box_lt(b, o)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(b);
    }
    return out;
  };
  auto minimal_of = [](const std::vector<Box>& set) {
    std::vector<Box> out;
    for (const Box& b : set) {
      bool minimal = true;
      for (const Box& o : set)
        if (box_lt(o, b)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(b);
    }
    return out;
  };

  std::vector<Box> comp_in_r, c_in_r;
  for (const Box& b : rs.R) (c.contains(b) ? c_in_r : comp_in_r).push_back(b);
  rs.S = maximal_of(comp_in_r);
  rs.T = minimal_of(c_in_r);

  auto diagonal_tail = [&rs](const std::vector<Box>& heads, int min_shift) {
    std::vector<Box> out;
    for (const Box& b : rs.R) {
      for (const Box& h : heads) {
        int i = h.row - b.row;
        if (i == h.col - b.col && i >= min_shift) {
          out.push_back(b);
          break;
        }
      }
    }
    return out;
  };
  rs.Sbar = diagonal_tail(rs.S, 0);
  rs.Tbar = diagonal_tail(rs.T, 1);
  return rs;
}

void validate_dvec(const YoungDiagram& d, const DVec& dv) {
  if (static_cast<int>(dv.size()) != d.diagonal_count())
    throw std::invalid_argument("d-vector must have one entry per diagonal (" +
                                std::to_string(d.diagonal_count()) + ")");
  for (long long v : dv)
    if (v < 0) throw std::invalid_argument("d-vector entries must be nonnegative");
}

long long dvec_at(const YoungDiagram& d, const DVec& dv, int ell) {
  if (!d.has_diagonal(ell)) throw std::out_of_range("diagonal out of range");
  return dv[d.max_diag() - ell];
}

DVec diagonal_lengths(const YoungDiagram& d) {
  DVec out;
  for (int l = d.max_diag(); l >= d.min_diag(); --l)
    out.push_back(static_cast<long long>(d.diagonal(l).size()));
  return out;
}

DiagonalDeletion delete_diagonal(const YoungDiagram& d, const DVec& dv, int ell,
                                 DeleteSide side) {
  validate_dvec(d, dv);
  if (!d.has_diagonal(ell)) throw std::out_of_range("diagonal out of range");

  auto lengths_match = [&d, ell](int partner) {
    return d.has_diagonal(partner) && d.diagonal(partner).size() == d.diagonal(ell).size();
  };
  if (side == DeleteSide::Auto) {
    if (ell >= 0 && lengths_match(ell + 1))
      side = DeleteSide::Below;
    else if (ell <= 0 && lengths_match(ell - 1))
      side = DeleteSide::Left;
    else
      throw std::invalid_argument("no adjacent diagonal of equal length");
  }
  if (side == DeleteSide::Below) {
    if (ell < 0) throw std::invalid_argument("below-pairing requires l >= 0");
    if (!lengths_match(ell + 1))
      throw std::invalid_argument("diagonals " + std::to_string(ell) + " and " +
                                  std::to_string(ell + 1) + " have different lengths");
  } else {
    if (ell > 0) throw std::invalid_argument("left-pairing requires l <= 0");
    if (!lengths_match(ell - 1))
      throw std::invalid_argument("diagonals " + std::to_string(ell) + " and " +
                                  std::to_string(ell - 1) + " have different lengths");
  }

  // New boxes tagged with the old box whose coordinate they take over.
  std::vector<std::pair<Box, Box>> moved;
  for (const Box& b : d.boxes()) {
    int l = b.diag();
    if (l == ell) continue;
    if (side == DeleteSide::Below) {
      if (l < ell)
        moved.push_back({b, b});
      else
        moved.push_back({{b.row - 1, b.col}, b});
    } else {
      if (l > ell)
        moved.push_back({b, b});
      else
        moved.push_back({{b.row, b.col - 1}, b});
    }
  }
  std::sort(moved.begin(), moved.end());

  std::vector<int> parts;
  for (const auto& [nb, ob] : moved) {
    if (nb.row > static_cast<int>(parts.size())) {
      if (nb.row != static_cast<int>(parts.size()) + 1 || nb.col != 1)
        throw std::logic_error("diagonal deletion produced a non-diagram");
      parts.push_back(1);
    } else {
      if (nb.col != parts[nb.row - 1] + 1)
        throw std::logic_error("diagonal deletion produced a non-diagram");
      parts[nb.row - 1] = nb.col;
    }
  }

  DiagonalDeletion out{YoungDiagram::from_partition(parts), {}, {}};
  DVec nd;
  for (int l = d.max_diag(); l >= d.min_diag(); --l)
    if (l != ell) nd.push_back(dvec_at(d, dv, l));
  out.dvec = std::move(nd);
  out.source.resize(out.diagram.size());
  for (const auto& [nb, ob] : moved) out.source[out.diagram.index_of(nb)] = ob;
  return out;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + tok + "'");
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty partition text");
  return parts;
}

UpSet parse_upset(const YoungDiagram& d, const std::string& text) {
  if (text == "empty" || text.empty()) return UpSet::empty(d);
  if (text == "full") return UpSet::full(d);
  std::vector<Box> gens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto comma = tok.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad up-set generator '" + tok + "'");
    try {
      gens.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("bad up-set generator '" + tok + "'");
    }
  }
  return UpSet::closure(d, gens);
}

DVec parse_dvec(const std::string& text) {
  DVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad d-vector entry '" + tok + "'");
    }
  }
  return out;
}

std::string format_partition(const std::vector<int>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace polymut
