#ifndef SIGGB_PAIRS_HPP
#define SIGGB_PAIRS_HPP

#include "siggb/basis.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string_view>

namespace siggb {

struct PairSide {
  Monomial multiplier;
  Serial id{};
};

/// [t_f (u, f), t_g (v, g)] with lpp(t_f u) >= lpp(t_g v). Elements are held
/// by serial so later basis growth never touches queued pairs.
struct CriticalPair {
  PairSide first;
  PairSide second;
  Monomial lcm;
  Signature lead_sig;
  Signature second_sig;
};

enum class PairClass { NonRegular, SuperRegular, Regular };

std::string_view to_string(PairClass c);

/// Builds and orients the pair. Equal scaled signatures put the lower
/// serial first, so argument order never matters. PreconditionError when
/// either polynomial part is zero.
CriticalPair make_pair(const LabeledPoly& a, const LabeledPoly& b, const ModuleOrder& mo);

/// Regular iff lead_sig > second_sig. On equal signatures the pair is
/// NonRegular when the module leads cancel (lc(u) = c*lc(v)), SuperRegular
/// otherwise; without module vectors the coefficients are unknown and the
/// pair counts as NonRegular.
PairClass classify(const CriticalPair& p, const Basis& basis, const PrimeField& field);

enum class Strategy { MinimalSignature, MinimalDegree, Fifo };

std::string_view to_string(Strategy s);

/// Pending critical pairs, popped by strategy with insertion order breaking
/// ties. With dedup on, at most one pair per lead signature is kept.
class PairQueue {
public:
  /// incoming_first < incumbent_first under the active partial order.
  using FirstLess = std::function<bool(Serial incoming_first, Serial incumbent_first)>;

  enum class InsertOutcome { Inserted, ReplacedIncumbent, DroppedIncoming };

  /// mo must outlive the queue.
  PairQueue(Strategy strategy, const ModuleOrder& mo, bool dedup);

  PairQueue(const PairQueue&) = delete;
  PairQueue& operator=(const PairQueue&) = delete;

  /// With dedup on and a pending pair of equal lead signature, the incoming
  /// pair replaces it only if first_less says its first element is smaller.
  InsertOutcome insert(CriticalPair p, const FirstLess& first_less = {});
  std::optional<CriticalPair> pop();

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Strategy strategy() const { return strategy_; }
  bool dedup() const { return dedup_; }

private:
  struct Entry {
    CriticalPair pair;
    std::uint64_t seq;
  };
  struct EntryLess {
    Strategy strategy;
    const ModuleOrder* mo;
    bool operator()(const Entry& a, const Entry& b) const;
  };
  using EntrySet = std::set<Entry, EntryLess>;

  Strategy strategy_;
  bool dedup_;
  std::uint64_t next_seq_ = 0;
  EntrySet entries_;
  std::map<Signature, EntrySet::iterator, SignatureKeyLess> by_sig_;
};

} // namespace siggb

#endif
