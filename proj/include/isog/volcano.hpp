#pragma once

#include "isog/torsion.hpp"

namespace isog {

const char* embedded_modpoly_table();

/// Classical modular polynomials Phi_l as integer monomial triples, reduced
/// mod p on demand. File format: "l i j c" with i >= j (symmetric form).
class ModularPolynomialTable {
  public:
    /// Parses the embedded table.
    explicit ModularPolynomialTable(const Zp& F);
    /// Parses a table file (--modpoly-path).
    ModularPolynomialTable(const Zp& F, const std::string& path);

    bool has(long ell) const { return table_.count(ell) != 0; }
    /// Phi_l(j, y) as a polynomial in y.
    FpPoly specialize(long ell, const Int& j) const;
    /// Phi_l(x, y) evaluated at both arguments.
    Int evaluate(long ell, const Int& x, const Int& y) const;
    std::vector<long> primes() const;

  private:
    void parse(const Zp& F, const std::string& text);
    // per l: dense coefficient grid [i][j], already reduced mod p
    std::map<long, std::vector<std::vector<Int>>> table_;
    Zp zp_;
};

struct IsogenyChainStep {
    EllipticCurve domain, codomain;
    RationalMap map;  // the l-isogeny x-map, kernel polynomial included
};

struct VolcanoInfo {
    long ell = 0;
    long height = 0;
    long depth = 0;            // of the input curve below the crater
    bool crater_cyclic = false;
    EllipticCurve top;         // l-maximal model reached by the ascent
    std::vector<IsogenyChainStep> ascent;  // length == depth
};

/// Multiset of roots of Phi_l(j, y) over F_q.
std::vector<Int> ell_neighbors(const ModularPolynomialTable& tab, const Zp& F, const Int& j,
                               long ell, Rng& rng);

/// Distance from j to the volcano floor by non-backtracking walks (two per
/// neighbor); a two-neighbor node whose walks all cycle is an h = 0 crater.
long probe_depth(const ModularPolynomialTable& tab, const Zp& F, const Int& j, long ell,
                 long max_steps, Rng& rng);

/// Height of the volcano through j (distance from its crater to the floor).
long probe_height(const ModularPolynomialTable& tab, const Zp& F, const Int& j, long ell,
                  long max_steps, Rng& rng);

/// Walk E up to the crater along explicit l-isogenies.
std::pair<EllipticCurve, std::vector<IsogenyChainStep>> ascend_to_crater(
    const KummerTower& T, const ModularPolynomialTable& tab, const EllipticCurve& E, long ell,
    long max_steps, Rng& rng);

/// True iff pi on E_max[l^(h+1)] has two distinct eigenvalues.
bool crater_is_cyclic(const KummerTower& T, const EllipticCurve& Emax, long ell, long h,
                      Rng& rng);

/// Pull the kernel polynomial of a degree-r isogeny on the crater back down
/// to the foot of an ascent chain, one resultant per l-isogeny step.
TPoly transport_kernel(const KummerTower& T, const TPoly& kernel_on_top,
                       const std::vector<IsogenyChainStep>& chain, long r);

VolcanoInfo volcano_info(const KummerTower& T, const ModularPolynomialTable& tab,
                         const EllipticCurve& E, long ell, long max_height, Rng& rng);

}  // namespace isog
