#include "gtn/schwarzschild_modes.hpp"

#include <algorithm>

namespace gtn {

double hawking_temperature(double mass)
{
  detail::require(mass > 0.0, "black-hole mass must be positive");
  return 1.0 / (8.0 * std::numbers::pi * mass);
}

const ModeList& five_mode_labels()
{
  static const ModeList labels{"A", "B_I", "B_II", "C_I", "C_II"};
  return labels;
}

namespace {

struct IdInfo {
  ReducedStateId id;
  std::string_view name;
  ModeList modes;
};

const std::array<IdInfo, 16>& id_table()
{
  static const std::array<IdInfo, 16> table{{
      {ReducedStateId::A_BI_CI, "A_BI_CI", {"A", "B_I", "C_I"}},
      {ReducedStateId::A_BI_CII, "A_BI_CII", {"A", "B_I", "C_II"}},
      {ReducedStateId::A_BII_CI, "A_BII_CI", {"A", "B_II", "C_I"}},
      {ReducedStateId::A_BII_CII, "A_BII_CII", {"A", "B_II", "C_II"}},
      {ReducedStateId::A_BI_BII, "A_BI_BII", {"A", "B_I", "B_II"}},
      {ReducedStateId::A_CI_CII, "A_CI_CII", {"A", "C_I", "C_II"}},
      {ReducedStateId::BI_BII, "BI_BII", {"B_I", "B_II"}},
      {ReducedStateId::CI_CII, "CI_CII", {"C_I", "C_II"}},
      {ReducedStateId::A_BI, "A_BI", {"A", "B_I"}},
      {ReducedStateId::A_CI, "A_CI", {"A", "C_I"}},
      {ReducedStateId::BI_CI, "BI_CI", {"B_I", "C_I"}},
      {ReducedStateId::BII_CII, "BII_CII", {"B_II", "C_II"}},
      {ReducedStateId::A_BII, "A_BII", {"A", "B_II"}},
      {ReducedStateId::A_CII, "A_CII", {"A", "C_II"}},
      {ReducedStateId::BI_CII, "BI_CII", {"B_I", "C_II"}},
      {ReducedStateId::BII_CI, "BII_CI", {"B_II", "C_I"}},
  }};
  return table;
}

const IdInfo& info(ReducedStateId id)
{
  const auto& table = id_table();
  const auto it = std::find_if(table.begin(), table.end(), [id](const IdInfo& e) { return e.id == id; });
  detail::require(it != table.end(), "unknown reduced state id");
  return *it;
}

}  // namespace

std::string_view id_name(ReducedStateId id) { return info(id).name; }

std::optional<ReducedStateId> id_from_name(std::string_view name)
{
  for (const auto& e : id_table())
    if (e.name == name) return e.id;
  return std::nullopt;
}

const ModeList& id_modes(ReducedStateId id) { return info(id).modes; }

bool is_tripartite(ReducedStateId id) { return info(id).modes.size() == 3; }

std::size_t tripartite_slot(ReducedStateId id)
{
  const auto it = std::find(kTripartiteIds.begin(), kTripartiteIds.end(), id);
  detail::require(it != kTripartiteIds.end(), "not a three-mode reduction");
  return static_cast<std::size_t>(it - kTripartiteIds.begin());
}

std::size_t pair_slot(ReducedStateId id)
{
  const auto it = std::find(kPairIds.begin(), kPairIds.end(), id);
  detail::require(it != kPairIds.end(), "not a two-mode reduction");
  return static_cast<std::size_t>(it - kPairIds.begin());
}

BasisOrder closed_form_basis_order(ReducedStateId id)
{
  if (id == ReducedStateId::A_BI_BII || id == ReducedStateId::A_CI_CII)
    return {basis_index("000"), basis_index("100"), basis_index("010"), basis_index("001"),
            basis_index("101"), basis_index("111"), basis_index("110"), basis_index("011")};
  return identity_order(is_tripartite(id) ? 8 : 4);
}

MeasuresCatalog measures_catalog(const ScenarioParams<double>& params)
{
  params.checked();
  MeasuresCatalog out;
  out.params = params;
  const auto rho = density_from_pure(build_state(params));

  for (auto id : kTripartiteIds) {
    auto& m = out.tripartite[tripartite_slot(id)];
    m.svetlichny_closed = svetlichny_closed_form(params, id);
    m.gte_closed = gte_closed_form(params, id);
    const auto reduced = partial_trace(rho, std::span<const std::string>(id_modes(id)));
    const auto x = x_params3_from_matrix<double>(permute_basis(reduced, closed_form_basis_order(id)));
    m.svetlichny_generic = svetlichny_xstate(x);
    m.gte_generic = gte_xstate(x);
  }

  for (auto id : kPairIds) {
    auto& m = out.pairs[pair_slot(id)];
    m.bell_closed = bell_closed_form(params, id);
    m.concurrence_closed = pair_concurrence_closed_form(params, id);
    const auto reduced = partial_trace(rho, std::span<const std::string>(id_modes(id)));
    m.bell_generic = chsh_max(reduced);
    m.concurrence_generic = concurrence_xstate(x_params2_from_matrix<double>(reduced.matrix()));
  }

  out.bell_bi_bii_literal = bell_bi_bii_literal(params);
  return out;
}

}  // namespace gtn
