"""
The suites the engine knows, in report order. Each entry names the group
that implements it, the statement it checks, the arenas it evaluates in
and the metrics it accepts.
"""
from cloudmesh.hypercomplex.error import ConfigError

JET_METRICS = ("identity", "jet-random", "jet-matrix")
ALL_METRICS = JET_METRICS + ("exp-weight",)

CATALOG = [
    {"name": "algebra", "group": "algebra",
     "anchor": "e_kī_l + ī_le_k = 0, e_ki_k + i_ke_k = 2, i_kJ = Jī_{k+n}",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "structure", "group": "algebra",
     "anchor": "∗∗ = (−1)^{p+q}, ⟨ξ,η⟩vol = ξ∧∗η, IJ = K, φ = ω_J + iω_K",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "hodge", "group": "calculus",
     "anchor": "[Λ, ∂] = i∂̄*, [Λ, ∂̄] = −i∂*",
     "arenas": ("jet",), "metrics": ()},
    {"name": "twisted", "group": "calculus",
     "anchor": "[Λ_J, ∂_J] table of sixteen commutators",
     "arenas": ("jet",), "metrics": ()},
    {"name": "dolbeault", "group": "calculus",
     "anchor": "d_J = ∂_J + ∂̄_J, ∂̄∂_J + ∂_J∂̄ = 0, graded Leibniz",
     "arenas": ("jet",), "metrics": ()},
    {"name": "adjoint", "group": "calculus",
     "anchor": "(Du, v) = (u, D*v) against e^{−φ}",
     "arenas": ("fourier",), "metrics": ("exp-weight",)},
    {"name": "connection", "group": "bundle",
     "anchor": "ϑ = H⁻¹∂H, ∂ϑ = −ϑ∧ϑ",
     "arenas": ("jet", "fourier"), "metrics": ALL_METRICS},
    {"name": "curvature", "group": "bundle",
     "anchor": "∂̄ϑ component formula, Θ_K = iΘ_J, Θ_φ̄ = Θ_J",
     "arenas": ("jet", "fourier"), "metrics": ALL_METRICS},
    {"name": "bundle", "group": "bundle",
     "anchor": "△'' − △'_J = [e(Θ_J), Λ_J] and the D operator tables",
     "arenas": ("fourier",), "metrics": ("exp-weight",)},
    {"name": "commutator", "group": "curvature",
     "anchor": "[ē_pē_q, ī_kī_{k+n}] case table",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "inner", "group": "curvature",
     "anchor": "⟨[e(Θ),Λ]ξ,ξ⟩ pair sum expansion",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "kahler-curvature", "group": "curvature",
     "anchor": "⟨[e(iΘ),Λ_I]ξ,ξ⟩ expansion",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "twisted-curvature", "group": "curvature",
     "anchor": "⟨[e(Θ_J),Λ_J]ξ,ξ⟩ expansion",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "symbolic", "group": "curvature",
     "anchor": "⟨[e(Θ_J),Λ_J]ξ,ξ⟩ with indeterminate R",
     "arenas": ("scalar",), "metrics": ()},
    {"name": "positivity", "group": "positivity",
     "anchor": "(k,s)-positivity, Griffiths against Nakano",
     "arenas": ("rational",), "metrics": ()},
    {"name": "rescale", "group": "positivity",
     "anchor": "r_j = ν_j/(κμ_j + ν_j), 2(p−s) − (2n−s) ≥ 1",
     "arenas": ("rational",), "metrics": ()},
    {"name": "certificate", "group": "positivity",
     "anchor": "−½[e(Θ_J),Λ_J] positive definite for p > n + ⌊k/2⌋",
     "arenas": ("rational",), "metrics": ()},
    {"name": "normalize", "group": "coordinates",
     "anchor": "z = w + ½Σ b w w osculates to order 2",
     "arenas": ("jet",), "metrics": ()},
]

_BY_NAME = {entry["name"]: entry for entry in CATALOG}


def names():
    return [entry["name"] for entry in CATALOG]


def entry(name):
    """
    :param name: the suite name
    :return: the catalog entry
    :raises ConfigError: for an unknown suite
    """
    if name not in _BY_NAME:
        raise ConfigError(f"suite '{name}' not yet supported")
    return _BY_NAME[name]


def position(name):
    return names().index(name)


def anchor(name):
    return f"{name} / {entry(name)['anchor']}"


def list_suites():
    """
    :return: list of dicts with the keys name, group, anchor and arenas
    """
    return [{"name": e["name"],
             "group": e["group"],
             "anchor": anchor(e["name"]),
             "arenas": ", ".join(e["arenas"])} for e in CATALOG]
