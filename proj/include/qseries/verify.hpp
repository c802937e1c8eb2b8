#pragma once

#include "qseries/bailey.hpp"
#include "qseries/configsum.hpp"
#include "qseries/fermion.hpp"
#include "qseries/oracle.hpp"
#include "qseries/stringfunc.hpp"

#include "json.hpp"

namespace qseries {

struct RunConfig {
    Rat order{30};
    SumConfig sum;
    int jobs = 1;
    bool structured = false;
    bool fermionic_rhs = false;  // evaluate bose-fermi right-hand sides fermionically
};

// --- Lemma with indeterminates a = q^alpha, b = q^beta ----------------------
IdentityReport check_lemma43(long long alpha, long long beta, const Rat& order,
                             const SumConfig& cfg = {});

// --- classical summation/transformation formulas at monomial arguments ------
IdentityReport check_qbinthm(const Monomial& a, long long n, const Rat& order);
IdentityReport check_xq(const Monomial& x, const Rat& order,
                        const SumConfig& cfg = {});
IdentityReport check_qcv(long long n, const Monomial& a, const Monomial& c,
                         const Rat& order);
// Heine with a = b = 0 and with a = 0, b monomial
IdentityReport check_heine00(const Monomial& c, const Monomial& z,
                             const Rat& order, const SumConfig& cfg = {});
IdentityReport check_heine_a0(const Monomial& b, const Monomial& c,
                              const Monomial& z, const Rat& order,
                              const SumConfig& cfg = {});
// q-Kummer-Thomae-Whipple with a, b -> infinity
IdentityReport check_qktw_abinf(const Monomial& c, const Monomial& d,
                                const Monomial& e, const Rat& order,
                                const SumConfig& cfg = {});

// --- generalized Euler identity and its technical lemma ---------------------
IdentityReport check_euler_generalized(long long p, long long pp, long long l,
                                       long long eta, const Rat& order,
                                       const SumConfig& cfg = {});
IdentityReport check_lemtech(long long p, long long pp, long long l,
                             long long eta, const Rat& order,
                             const SumConfig& cfg = {});

// --- the level 1/2 and level -2/3 propositions ------------------------------
IdentityReport check_level_half_prop(int which, long long m, const Rat& order,
                                     const SumConfig& cfg = {});
IdentityReport check_ising_prop(int which, long long m, const Rat& order,
                                const SumConfig& cfg = {});
IdentityReport check_ising_halfsum(long long r, long long m);

// --- fermionic string function corollaries ----------------------------------
IdentityReport check_corcf(long long p, long long pp, long long m, long long l,
                           const Rat& order, const SumConfig& cfg = {});

// --- branching functions and the bose-fermi identity ------------------------
QSeries branching_fn(long long p1, long long pp1, long long p2, long long pp2,
                     long long r, long long l, long long s, const Rat& order,
                     const SumConfig& cfg = {});
QSeries bfid_lhs(long long p1, long long pp1, long long p2, long long pp2,
                 long long r, long long b, long long s, long long l,
                 const Rat& order, const SumConfig& cfg = {});
QSeries bfid_rhs(long long p1, long long pp1, long long p2, long long pp2,
                 long long r, long long b, long long s, long long l,
                 const Rat& order, bool fermionic, const SumConfig& cfg = {});
long long bfid_r_of(long long p1, long long pp1, long long b);
IdentityReport check_bfid(long long p1, long long pp1, long long p2,
                          long long pp2, long long b, long long s, long long l,
                          const Rat& order, bool fermionic = false,
                          const SumConfig& cfg = {});
// the four branching-function reductions of the left-hand side
IdentityReport check_bfid_reduction(long long p1, long long pp1, long long p2,
                                    long long pp2, long long b, long long s,
                                    long long l, const Rat& order,
                                    const SumConfig& cfg = {});
// r=0/r=1, b=1 interchange symmetry between the two model slots
IdentityReport check_bfid_swap(long long p1, long long pp1, long long p2,
                               long long pp2, long long s, long long l,
                               long long r, const Rat& order,
                               const SumConfig& cfg = {});

// --- the closing theorem ------------------------------------------------
IdentityReport check_rrppp(long long p, long long pp, long long l, int delta,
                           long long k, long long i, const Rat& order,
                           const SumConfig& cfg = {});
// its (1,3) product side through the triple product identity
IdentityReport check_rrppp_product(long long k, int delta, long long i,
                                   const Rat& order, const SumConfig& cfg = {});

// --- Rogers-Ramanujan, all routes -------------------------------------------
IdentityReport check_rr(int which, const Rat& order, const SumConfig& cfg = {});

// --- registry / manifest -----------------------------------------------------
using Params = nlohmann::json;
std::vector<std::string> known_identities();
std::vector<IdentityReport> run_identity(const std::string& name,
                                         const Params& params,
                                         const RunConfig& cfg);
std::vector<IdentityReport> run_manifest(const nlohmann::json& manifest,
                                         const RunConfig& cfg);
nlohmann::json report_to_json(const IdentityReport& rep);

}  // namespace qseries
