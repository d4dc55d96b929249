#pragma once

// Disks, pegs, regular states and the move rules of the Fibonacci-Hanoi
// family: classical single-disk moves, k-Fibonacci moves (original and
// variant styles) and (p,q)-moves, each optionally restricted by a peg
// digraph.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hanoifib {

inline constexpr int kMaxDisks = 63;

enum class Peg : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Peg, 3> kPegs{Peg::A, Peg::B, Peg::C};

constexpr int index_of(Peg p) { return static_cast<int>(p); }
constexpr Peg peg_at(int i) { return static_cast<Peg>(i); }
constexpr Peg third_peg(Peg x, Peg y) { return peg_at(3 - index_of(x) - index_of(y)); }
char peg_name(Peg p);
std::optional<Peg> parse_peg(char c);

/// A set of disk radii, bit k-1 standing for the disk of radius k.
class DiskSet {
 public:
  constexpr DiskSet() = default;
  DiskSet(std::initializer_list<int> radii);

  static constexpr DiskSet from_mask(std::uint64_t mask) { return DiskSet(mask, 0); }
  /// Disks lo..hi; lo is clamped to 1 and the result is empty when lo > hi.
  static DiskSet range(int lo, int hi);
  /// The tower of the k smallest disks; empty for k < 1.
  static DiskSet smallest(int k) { return range(1, k); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  bool contains(int radius) const;
  constexpr bool contains_all(DiskSet other) const { return (mask_ & other.mask_) == other.mask_; }
  /// Radius of the smallest member, i.e. the disk on top of the peg; 0 if empty.
  constexpr int top() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  std::vector<int> radii() const;

  friend constexpr DiskSet operator|(DiskSet a, DiskSet b) { return DiskSet(a.mask_ | b.mask_, 0); }
  friend constexpr DiskSet operator&(DiskSet a, DiskSet b) { return DiskSet(a.mask_ & b.mask_, 0); }
  friend constexpr DiskSet operator-(DiskSet a, DiskSet b) { return DiskSet(a.mask_ & ~b.mask_, 0); }
  friend constexpr bool operator==(DiskSet a, DiskSet b) = default;

 private:
  constexpr DiskSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// A regular state: an ordered 3-partition of the disks 1..n over pegs A, B, C.
class State {
 public:
  /// Throws Error(kInvalidState) when the pegs overlap or miss a disk of 1..n.
  State(int n, DiskSet a, DiskSet b, DiskSet c);

  static State tower(int n, Peg peg);
  /// Inverse of code(): base-3 digits give the peg of each disk, disk 1 least significant.
  static State from_code(int n, std::uint64_t code);

  int disks() const { return n_; }
  DiskSet on(Peg p) const { return pegs_[index_of(p)]; }
  Peg location(int radius) const;
  std::uint64_t code() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  int n_ = 0;
  std::array<DiskSet, 3> pegs_{};
};

/// Text form "(2345,-,1)": pegs A, B, C in order, radii ascending, "-" for an
/// empty peg. Radii are joined with '.' once the state has ten or more disks.
std::string to_string(const State& state);
/// Inverse of to_string(); n is the largest radius present.
State parse_state(std::string_view text);

enum class Family { kClassical, kFibonacci, kPQ };
enum class Style { kOriginal, kVariant };

/// Which ordered peg pairs (from, to) the principal disk of a move may travel.
class PegDigraph {
 public:
  constexpr PegDigraph() = default;

  static PegDigraph complete();
  /// A<->B and B<->C only.
  static PegDigraph linear();
  /// A->B, B->C, C->A.
  static PegDigraph clockwise();

  PegDigraph& allow(Peg from, Peg to);
  bool allows(Peg from, Peg to) const;
  bool is_complete() const { return bits_ == complete().bits_; }
  std::uint8_t bits() const { return bits_; }

  friend bool operator==(PegDigraph, PegDigraph) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct RuleSet {
  Family family = Family::kFibonacci;
  Style style = Style::kOriginal;
  int p = 1;
  int q = 1;
  PegDigraph pegs = PegDigraph::complete();

  static RuleSet classical();
  static RuleSet fibonacci(Style style = Style::kOriginal);
  /// Throws Error(kDomain) unless p >= 1 and q >= 0.
  static RuleSet pq(int p, int q);

  RuleSet restricted(PegDigraph digraph) const;

  // Number of disks the principal run spans on its source peg, and the
  // number of extra disks lifted from the helper peg. Classical is (1,0),
  // Fibonacci is (1,1).
  int lift() const;
  int carry() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

std::string describe(const RuleSet& rules);

enum class MoveKind { kSingle, kFib, kPQ };

/// A legal transition. `disk` is the principal (largest moved) disk, `from`
/// the peg holding it, `via` the peg supplying the lower tower (absent for
/// classical single-disk moves) and `to` the destination.
struct Move {
  MoveKind kind = MoveKind::kFib;
  int disk = 1;
  Peg from = Peg::A;
  std::optional<Peg> via;
  Peg to = Peg::C;

  friend bool operator==(const Move&, const Move&) = default;
};

const char* kind_name(MoveKind kind);
std::string to_string(const Move& move);

/// All legal moves, ordered by principal disk and then destination peg.
std::vector<Move> legal_moves(const State& state, const RuleSet& rules);

/// Throws Error(kIllegalMove) naming the violated condition.
State apply_move(const State& state, const Move& move, const RuleSet& rules);

/// The legal move of principal disk `disk` from its peg to `to`, if any.
std::optional<Move> find_move(const State& state, const RuleSet& rules, int disk, Peg to);

}  // namespace hanoifib
