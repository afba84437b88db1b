#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcop/types.hpp"

namespace mcop {

enum class Family { None, GtA, GtC, Pi1, Pi2 };
const char* family_name(Family f);
Family parse_family(std::string_view s);

struct FamilyTag {
  Family family = Family::None;
  int n = 0;
  std::vector<Int> lambda;
};

class MarkedPoset {
 public:
  int add(const std::string& name, bool marked = false, const Int& lambda = 0);
  void add_cover(int lower, int upper);
  void add_cover(std::string_view lower, std::string_view upper);

  int size() const { return static_cast<int>(names_.size()); }
  int find(std::string_view name) const;
  const std::string& name(int e) const { return names_[e]; }
  bool marked(int e) const { return marked_[e]; }
  const Int& lambda(int e) const { return lambda_[e]; }
  void set_lambda(int e, const Int& v) { lambda_[e] = v; }
  const std::vector<int>& lower(int e) const { return lower_[e]; }
  const std::vector<int>& upper(int e) const { return upper_[e]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Optional shift vector supplied with the poset, indexed by element.
  std::optional<std::vector<Int>> u_given;
  FamilyTag tag;

  static MarkedPoset from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> marked_;
  std::vector<Int> lambda_;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<std::pair<int, int>> covers_;
  std::unordered_map<std::string, int> index_;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Validation {
  bool ok = false;
  std::vector<Check> checks;
  std::optional<Errc> error;
  std::string message;
  std::vector<int> rank;  // filled when the poset is graded
};

Validation validate(const MarkedPoset& p);

// A validated graded marked poset with its coordinate layout: the unmarked
// elements sorted by (rank, name) are the coordinates of R^{Π∖Π*}.
class GradedPoset {
 public:
  explicit GradedPoset(MarkedPoset p);

  const MarkedPoset& poset() const { return p_; }
  const FamilyTag& tag() const { return p_.tag; }
  int rank(int e) const { return rank_[e]; }
  int max_rank() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<int>& level(int i) const { return levels_[i]; }
  int dim() const { return static_cast<int>(free_.size()); }
  int elem(int c) const { return free_[c]; }
  int coord(int e) const { return coord_[e]; }
  const std::string& coord_name(int c) const { return p_.name(free_[c]); }
  int coord_of(std::string_view name) const;
  // Lower covers of coordinate c: unmarked ones as coordinates, marked ones as elements.
  const std::vector<int>& lower_free(int c) const { return lower_free_[c]; }
  const std::vector<int>& lower_marked(int c) const { return lower_marked_[c]; }

 private:
  MarkedPoset p_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> free_, coord_;
  std::vector<std::vector<int>> lower_free_, lower_marked_;
};

struct BreveLevel {
  int level = 0;
  std::vector<int> lower, upper;
  std::vector<std::pair<int, int>> edges;  // (lower, upper) cover pairs kept
};

BreveLevel breve_level(const GradedPoset& p, int i);

enum class Shape { Trivial, ZigzagUnmarked, ZigzagMarkedTop };
const char* shape_name(Shape s);

struct LevelComponent {
  int level = 0;
  std::vector<int> lower;  // p_1, ..., p_{n_C+1}
  std::vector<int> upper;  // q_1, ..., q_{n_C}
  Shape shape = Shape::Trivial;
};

struct SpadeResult {
  bool ok = false;
  std::vector<LevelComponent> components;  // by level, then by smallest element name
  std::optional<LevelComponent> violation;
  std::string reason;
};

SpadeResult classify_spade(const GradedPoset& p);
// classify_spade that throws SPADE_VIOLATION.
SpadeResult require_spade(const GradedPoset& p);

// Data derived from a (♠) classification, indexed by coordinate.
struct ZigzagData {
  // hat_e[c]: coordinates whose unit vectors sum to ĥe of coordinate c.
  std::vector<std::vector<int>> hat_e;
  // Next unmarked coordinate of the same zigzag (the p_{k+1} of p_k), or -1.
  std::vector<int> next;
  // Tail of g_p = X_pY_p - 1 - tail: tail_y < 0 means no tail; tail_x < 0 means tail Y_q only.
  std::vector<int> tail_x, tail_y;
  // U(M, i) per level.
  std::vector<int> units_per_level;
  bool interior(int c) const { return tail_y[c] >= 0; }
};

ZigzagData zigzag_data(const GradedPoset& p, const SpadeResult& s);

// Per-element shift vector; marked entries equal λ.
std::vector<Int> choose_u(const GradedPoset& p, bool strict);
// The supplied u if present (checked), otherwise choose_u.
std::vector<Int> resolve_u(const GradedPoset& p, bool strict);
bool u_satisfies_assumption(const GradedPoset& p, const std::vector<Int>& u, bool strict, std::string* why);
RatVec u_coords(const GradedPoset& p, const std::vector<Int>& u);

std::string gt_name(int i, int j);
MarkedPoset gt_type_A(int n, const std::vector<Int>& lambda);
MarkedPoset gt_type_C(int n, const std::vector<Int>& lambda);
MarkedPoset basic_pi1(int n, const Int& bottom = 0, const Int& top = 3);
MarkedPoset basic_pi2(int n, const Int& lambda_last);
MarkedPoset build_family(Family f, int n, const std::vector<Int>& lambda);
std::vector<Int> default_lambda(Family f, int n);

// Identify a builder family by structural comparison (names, covers, marks).
FamilyTag recognize_family(const MarkedPoset& p);

}  // namespace mcop
