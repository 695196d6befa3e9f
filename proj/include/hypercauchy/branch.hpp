#pragma once

#include <initializer_list>
#include <vector>

namespace hypercauchy {

/// One loop in the z-plane, based at the evaluation point.  "around_1" loops
/// encircle z = 1; "around_inf" loops encircle the point at infinity (a large
/// circle enclosing both finite singular points, traversed so the loop is
/// positively oriented about infinity).  Positive orientation about z = 1 is
/// counterclockwise in the plane.
enum class LoopLetter {
    around_1_pos,
    around_1_neg,
    around_inf_pos,
    around_inf_neg,
};

/// Which branch of a multivalued value is meant, recorded as the word of
/// loops traversed from the principal determination.  An empty word is the
/// principal branch.
struct BranchContext {
    std::vector<LoopLetter> loop_word;

    BranchContext() = default;
    BranchContext(std::initializer_list<LoopLetter> w) : loop_word(w) {}

    static BranchContext principal() { return BranchContext{}; }

    bool is_principal() const { return loop_word.empty(); }

    /// Net signed winding about z = 1.
    int winding_around_1() const {
        int w = 0;
        for (auto s : loop_word) {
            if (s == LoopLetter::around_1_pos) ++w;
            if (s == LoopLetter::around_1_neg) --w;
        }
        return w;
    }

    /// Net signed winding about infinity.
    int winding_around_inf() const {
        int w = 0;
        for (auto s : loop_word) {
            if (s == LoopLetter::around_inf_pos) ++w;
            if (s == LoopLetter::around_inf_neg) --w;
        }
        return w;
    }

    /// True if the word mixes loops about both singular points.  Such words
    /// compose non-commuting branch actions and are handled by the
    /// continuation machinery, not by winding numbers alone.
    bool mixes_loop_types() const {
        bool has1 = false, hasInf = false;
        for (auto s : loop_word) {
            if (s == LoopLetter::around_1_pos || s == LoopLetter::around_1_neg)
                has1 = true;
            else
                hasInf = true;
        }
        return has1 && hasInf;
    }
};

} // namespace hypercauchy
