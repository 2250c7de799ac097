#pragma once

#include "borderlim/monomial.hpp"

#include <set>
#include <string>

namespace borderlim {

// Term order for the division and completion algorithms. The elimination
// kind compares the designated block first (by graded reverse lex), so a
// basis computed under it intersects down to the subring without the block.
class MonomialOrder {
  public:
    enum class Kind { Grevlex, Lex, Elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder elimination(std::set<VarId> eliminated) {
        return MonomialOrder(Kind::Elimination, std::move(eliminated));
    }

    Kind kind() const { return kind_; }
    const std::set<VarId>& eliminated() const { return eliminated_; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    std::string to_string() const;

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && eliminated_ == o.eliminated_;
    }

  private:
    MonomialOrder(Kind k, std::set<VarId> elim) : kind_(k), eliminated_(std::move(elim)) {}
    Kind kind_;
    std::set<VarId> eliminated_;
};

} // namespace borderlim
