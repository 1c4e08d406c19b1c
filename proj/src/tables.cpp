#include "hh/tables.hpp"

namespace hh {

namespace {

constexpr const char* kM0Note = "m_0 = t(x)x - u(x)y; the alternative t(x)y - u(x)x is not a cocycle";

}  // namespace

const std::vector<TableEntry>& hh1_hh1_table() {
    static const std::vector<TableEntry> t{
        {"m_0.m_0", "HH^1 x HH^1 table, squares", "m_0", "m_0", {}, kM0Note},
        {"m_1.m_1", "HH^1 x HH^1 table, squares", "m_1", "m_1", {}, ""},
        {"tau_y.tau_y", "HH^1 x HH^1 table, squares", "tau_y", "tau_y", {}, ""},
        {"mu_x.mu_x", "HH^1 x HH^1 table, squares", "mu_x", "mu_x", {}, ""},
        {"m_0.m_1", "HH^1 x HH^1 table, row 2 col 1", "m_0", "m_1", {{"nu_0", "2"}}, kM0Note},
        {"m_1.tau_y", "HH^1 x HH^1 table, row 2 col 2", "m_1", "tau_y", {{"nu_1", "2*y^2"}, {"nu_2", "-2"}}, ""},
        {"m_0.tau_y", "HH^1 x HH^1 table, row 3 col 1", "m_0", "tau_y", {{"nu_1", "-2*y^2"}}, kM0Note},
        {"m_1.mu_x", "HH^1 x HH^1 table, row 3 col 2", "m_1", "mu_x", {{"nu_1", "-2*x^2"}, {"nu_3", "-2"}}, ""},
        {"m_0.mu_x", "HH^1 x HH^1 table, row 4 col 1", "m_0", "mu_x", {{"nu_1", "-2*x^2"}}, kM0Note},
        {"tau_y.mu_x", "HH^1 x HH^1 table, row 4 col 2", "tau_y", "mu_x", {{"nu_1", "-z"}}, ""},
    };
    return t;
}

const std::vector<TableEntry>& hh1_hh2_table() {
    static const std::vector<TableEntry> t{
        {"m_0.nu_0", "HH^1 x HH^2 table, row 1 col 1", "m_0", "nu_0", {}, "printed as m_0 v_0, read as nu_0"},
        {"m_1.nu_0", "HH^1 x HH^2 table, row 1 col 2", "m_1", "nu_0", {}, ""},
        {"tau_y.nu_0", "HH^1 x HH^2 table, row 1 col 3", "tau_y", "nu_0", {{"q_xy", "y^2"}}, ""},
        {"mu_x.nu_0", "HH^1 x HH^2 table, row 1 col 4", "mu_x", "nu_0", {{"q_xy", "-x^2"}}, ""},
        {"m_0.nu_1", "HH^1 x HH^2 table, row 2 col 1", "m_0", "nu_1", {}, ""},
        {"m_1.nu_1", "HH^1 x HH^2 table, row 2 col 2", "m_1", "nu_1", {{"q_xy", "-2"}}, ""},
        {"tau_y.nu_1", "HH^1 x HH^2 table, row 2 col 3", "tau_y", "nu_1", {}, ""},
        {"mu_x.nu_1", "HH^1 x HH^2 table, row 2 col 4", "mu_x", "nu_1", {}, ""},
        {"m_0.nu_2", "HH^1 x HH^2 table, row 3 col 1", "m_0", "nu_2", {{"q_xy", "2*y^2"}}, ""},
        {"m_1.nu_2", "HH^1 x HH^2 table, row 3 col 2", "m_1", "nu_2", {{"q_xy", "-2*y^2"}}, ""},
        {"tau_y.nu_2", "HH^1 x HH^2 table, row 3 col 3", "tau_y", "nu_2", {}, ""},
        {"mu_x.nu_2", "HH^1 x HH^2 table, row 3 col 4", "mu_x", "nu_2", {{"q_xy", "-z"}}, ""},
        {"m_0.nu_3", "HH^1 x HH^2 table, row 4 col 1", "m_0", "nu_3", {{"q_xy", "2*x^2"}}, ""},
        {"m_1.nu_3", "HH^1 x HH^2 table, row 4 col 2", "m_1", "nu_3", {{"q_xy", "2*x^2"}}, ""},
        {"tau_y.nu_3", "HH^1 x HH^2 table, row 4 col 3", "tau_y", "nu_3", {{"q_xy", "z"}}, ""},
        {"mu_x.nu_3", "HH^1 x HH^2 table, row 4 col 4", "mu_x", "nu_3", {}, ""},
    };
    return t;
}

const std::vector<ModuleRelation>& module_relations() {
    static const std::vector<ModuleRelation> r{
        {"z.m_0", "HH^1, action of z on M_0", "m_0", "z", {{"tau_y", "2*x^2"}, {"mu_x", "-2*y^2"}}},
        {"z.nu_0", "HH^2, action of z on V_0", "nu_0", "z",
         {{"nu_1", "-2*x^2*y^2"}, {"nu_2", "x^2"}, {"nu_3", "y^2"}}},
        {"x^2.q_1", "HH^3, Q_1 annihilated by the generators of S", "q_1", "x^2", {}},
        {"y^2.q_1", "HH^3, Q_1 annihilated by the generators of S", "q_1", "y^2", {}},
        {"z.q_1", "HH^3, Q_1 annihilated by the generators of S", "q_1", "z", {}},
    };
    return r;
}

const std::vector<CochainRelation>& cochain_relations() {
    static const std::vector<CochainRelation> r{
        {"printed", "HH^2, the relation showing the sum of cyclic modules is not direct",
         {{"nu_2", "x^2"}, {"nu_1", "-2*x^2*y^2"}, {"nu_3", "y^2"}, {"nu_0", "-z"}},
         "as printed"},
        {"observed", "HH^2, the relation showing the sum of cyclic modules is not direct",
         {{"nu_2", "x^2"}, {"nu_1", "-2*x^2*y^2"}, {"nu_3", "-y^2"}, {"nu_0", "z"}},
         "sign pattern that holds for the representatives used here"},
    };
    return r;
}

const std::vector<RedundantCycle>& redundant_cycles() {
    static const std::vector<RedundantCycle> r{
        {"tv_2x3_uv_xz", "t^v # (2*x^3) - u^v # (x*z)"},
        {"tv_yz_uv_2y3", "t^v # (y*z) - u^v # (2*y^3)"},
    };
    return r;
}

}  // namespace hh
