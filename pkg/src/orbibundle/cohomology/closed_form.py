"""Closed forms for the twisted cohomology of orbifold groups, and the dihedral restriction lemma."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import Action
from ..errors import OutOfScopeError
from ..linalg import AbelianGroup, smith_normal_form
from ..linalg.intmat import transpose
from ..presentation import Generator, Presentation, Role
from ..rewriting import index_two_subgroup, tietze_reduce
from ..signature import OrbifoldSignature, euler_characteristic
from .fox import evaluate, fox_derivative, fox_matrix, h1
from .modules import integral

K_INVARIANT = "beta_u(U^2)"


@dataclass(frozen=True)
class ClosedForm:
    h2: AbelianGroup | None
    h3: AbelianGroup | None
    h3_basis: tuple[str, ...]
    k_invariant: str
    f2_h2_dim: int | None

    def to_dict(self) -> dict:
        return {
            "h2": self.h2.to_dict() if self.h2 else None,
            "h3": self.h3.to_dict() if self.h3 else None,
            "h3_basis": list(self.h3_basis),
            "k_invariant": self.k_invariant,
            "f2_h2_dim": self.f2_h2_dim,
        }


def theorem10_closed_form(sig: OrbifoldSignature, action: Action | None = None) -> ClosedForm:
    """Stated values of ``H^2``/``H^3`` with ``Z^u`` coefficients and the k-invariant symbol.

    Torsion-free bases have no singular locus and get k-invariant ``"0"``.
    The formula depends only on ``k`` and ``r``; ``action`` is accepted for
    interface symmetry.
    """
    if euler_characteristic(sig) > 0:
        raise OutOfScopeError(f"{sig}: the closed form needs an aspherical base")
    k, r = sig.k, sig.r
    if k + r == 0:
        return ClosedForm(None, None, (), "0", None)
    if k > 0:
        h2 = AbelianGroup.elementary(2, r)
    else:
        h2 = AbelianGroup(1, (2,) * (r - 1))
    h3 = AbelianGroup.elementary(2, k + r)
    basis = tuple(f"cone {i}" for i in range(1, k + 1)) + tuple(f"circle {j}" for j in range(1, r + 1))
    f2 = k if r == 0 else 2 * r + k
    return ClosedForm(h2, h3, basis, K_INVARIANT, f2)


def dihedral_presentation(k: int) -> Presentation:
    """Free product of ``k`` copies of ``Z/2``."""
    gens = tuple(Generator(f"x{i}", Role.CONE, i) for i in range(1, k + 1))
    return Presentation(gens, tuple((i, i) for i in range(1, k + 1)))


@dataclass(frozen=True)
class Lemma9Certificate:
    k: int
    h1_alpha: AbelianGroup
    kernel_rank: int
    restriction: list = field(repr=False)
    surjective: bool
    product_surjective: bool | None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "h1_alpha": self.h1_alpha.to_dict(),
            "kernel_rank": self.kernel_rank,
            "restriction": self.restriction,
            "surjective": self.surjective,
            "product_surjective": self.product_surjective,
        }


def _unimodular_image(rows: list[list[int]], n: int) -> bool:
    """Do the given vectors span ``Z^n``?"""
    if n == 0:
        return True
    if not rows:
        return False
    snf = smith_normal_form(transpose(rows, n), cols=len(rows))
    return snf.rank == n and all(d == 1 for d in snf.diagonal)


def lemma9_restriction(k: int) -> Lemma9Certificate:
    """Restriction ``H^1(alpha; Z^u) -> H^1(phi; Z)`` for ``alpha = *^k Z/2`` and ``u = -1`` on each factor.

    ``phi = ker u`` is free of rank ``k - 1``.  A crossed homomorphism
    restricts to a homomorphism on ``phi``; its values on a free basis of
    ``phi`` give the restriction matrix.  For even ``k`` the product
    ``z = x_1...x_k`` lies in ``phi`` and the restriction to ``<z>`` is
    certified as well.
    """
    if k < 2:
        raise ValueError("need at least two involutions")
    pres = dihedral_presentation(k)
    module = integral({l: -1 for l in pres.labels})
    cocycles = smith_normal_form(fox_matrix(pres, module), cols=pres.ngens).kernel_basis()
    sub = index_two_subgroup(pres, [1] * k)
    red = tietze_reduce(sub.presentation)
    if red.presentation.relators:
        raise RuntimeError("kernel of the dihedral action should be free")
    basis_words = [sub.schreier_words[i] for i in red.kept]

    def value(f, w):
        total = 0
        for g in range(pres.ngens):
            total += evaluate(fox_derivative(w, g), module, pres.labels)[0][0] * f[g]
        return total

    rows = [[value(f, w) for w in basis_words] for f in cocycles]
    surjective = _unimodular_image(rows, len(basis_words))
    product = None
    if k % 2 == 0:
        z = tuple(range(1, k + 1))
        product = _unimodular_image([[value(f, z)] for f in cocycles], 1)
    return Lemma9Certificate(k, h1(pres, module), len(basis_words), rows, surjective, product)
