#pragma once

#include "twistforge/ncpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistforge::ncalg {

// Oriented rewrite rule. lhs is a pure letter sequence; the right-hand side is
// t-graded so relations with an explicit deformation parameter (q^2 xz - zx =
// -t z^2) fit the same engine. Plain presentations keep everything at shift 0.
struct RewriteRule {
    std::vector<int> lhs;
    std::map<int, NCPoly> rhs; // t-shift -> value
};

enum class Strategy { LeftmostFirstRule, RightmostLastRule };

class Presentation {
  public:
    std::string name;

    int add_symbol(GeneratorSymbol s);
    int add_cartan(const std::string &name, std::vector<int> grading = {});
    void set_pairing(int cartan_idx, int sym_id, int q_exp);
    void set_precedence(int sym_id, int prec) { prec_[sym_id] = prec; }

    void add_rule_raw(std::vector<int> lhs, std::map<int, NCPoly> rhs);
    // Orient relation rel == 0 by the termination order and install it.
    void add_relation(const NCPoly &rel);
    void finalize();

    int n_symbols() const { return (int)symbols_.size(); }
    int cartan_rank() const { return (int)cartan_names_.size(); }
    const GeneratorSymbol &symbol(int id) const { return symbols_[id]; }
    const std::string &cartan_name(int c) const { return cartan_names_[c]; }
    const std::vector<std::string> &cartan_names() const { return cartan_names_; }
    std::optional<int> find_symbol(const std::string &name) const;
    std::optional<int> find_cartan(const std::string &name) const;
    const std::vector<RewriteRule> &rules() const { return rules_; }
    int precedence(int sym_id) const { return prec_[sym_id]; }
    int pairing(int cartan_idx, int sym_id) const { return pairing_[cartan_idx][sym_id]; }
    int t_cap() const { return t_cap_; }

    // q-exponent picked up when the cartan vector crosses the letter sequence.
    int crossing_exponent(const std::vector<int> &cartan, const std::vector<int> &seq) const;

    Word make_word(const std::vector<int> &seq, std::vector<int> cartan = {}) const;
    Word cartan_word(const std::vector<int> &cartan) const { return make_word({}, cartan); }
    NCPoly generator(int sym_id) const;
    NCPoly generator(const std::string &name) const;
    NCPoly cartan_monomial(std::vector<int> cartan) const;

    // Root-lattice weight of a word (cartan letters weigh nothing).
    std::vector<int> weight(const Word &w) const;

    // Termination order used to orient rules: graded lexicographic with the
    // letter precedence, cartan vector as final tiebreak.
    bool word_order_less(const Word &a, const Word &b) const;

    // --- the rewriting engine ---
    TNC reduce(const TNC &x, Strategy s = Strategy::LeftmostFirstRule) const;
    // memoized single-word normal form; only for undeformed presentations
    const NCPoly &normal_form_word(const Word &w) const;
    NCPoly normal_form(const NCPoly &x, Strategy s = Strategy::LeftmostFirstRule) const;

    // Concatenation product, then reduction.
    TNC mul(const TNC &a, const TNC &b, int trunc, Strategy s = Strategy::LeftmostFirstRule) const;
    NCPoly nc_multiply(const NCPoly &a, const NCPoly &b) const;
    NCPoly multiply_words_raw(const Word &a, const Word &b, QRatFunc c) const; // no reduction
    // normal_form(ab - v ba)
    NCPoly q_commutator(const NCPoly &a, const NCPoly &b, const QRatFunc &v) const;

    long rewrite_budget() const;

  private:
    friend void knuth_bendix_complete(Presentation &, int, int);
    bool find_match(const std::vector<int> &seq, Strategy s, int &pos, int &rule) const;
    void reduce_into(TNC &out, int tdeg, Word w, QRatFunc c, Strategy s, long &steps, int trunc) const;

    std::vector<GeneratorSymbol> symbols_;
    std::vector<std::string> cartan_names_;
    std::vector<std::vector<int>> cartan_gradings_;
    std::vector<std::vector<int>> pairing_; // [cartan][symbol]
    std::vector<int> prec_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<int>> rules_by_first_;
    int t_cap_ = 0;
    bool finalized_ = false;
    mutable std::unordered_map<Word, NCPoly, WordHash> nf_cache_;
};

struct SmokeReport {
    int trials = 0;
    int divergences = 0;
    std::vector<std::string> examples;
    bool pass() const { return divergences == 0; }
};

// Reduces random words with two different rule-application strategies and
// compares the results; guards the rule set, not the user.
SmokeReport confluence_smoke_check(const Presentation &p, int degree, int trials, unsigned long seed);

// Bounded Knuth-Bendix style completion for t-free presentations: resolves
// critical pairs whose overlap words stay within max_degree.
void knuth_bendix_complete(Presentation &p, int max_degree, int max_rounds = 8);

std::string word_str(const Presentation &p, const Word &w);
std::string ncpoly_str(const Presentation &p, const NCPoly &x);
std::string tnc_str(const Presentation &p, const TNC &x);

} // namespace twistforge::ncalg
