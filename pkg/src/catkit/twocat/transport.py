"""The 2-functor from adjunctions to monads and its right adjoint via algebras."""
from catkit.errors import ConstructionError, DomainError
from catkit.core import Functor, NatTrans, nat_diff, vcomp
from catkit.structures import em_category, monad_from_adjunction
from catkit.twocat.cells import AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell, retype


def phi_adjunction(adj):
    return monad_from_adjunction(adj)


def phi_one_cell(c):
    """``(J, V, lam)`` to ``(J, rho^-1 L . Rb lam)``."""
    L, Rb = c.source.left, c.target.right
    S = monad_from_adjunction(c.source)
    T = monad_from_adjunction(c.target)
    psi = retype(vcomp(c.rho_inv * L, Rb * c.lam), f"phi({c.lam.name})",
                 T.endo * c.top, c.top * S.endo)
    return MndOneCell(S, T, c.top, psi, name=f"phi({c.name})")


def phi_two_cell(t, source=None, target=None):
    return MndTwoCell(source or phi_one_cell(t.source), target or phi_one_cell(t.target),
                      t.alpha, name=f"phi({t.name})")


def _check_induces(adj, monad):
    m = monad_from_adjunction(adj)
    if not (m.endo.same_maps(monad.endo) and m.mult.components == monad.mult.components
            and m.unit.components == monad.unit.components):
        raise DomainError(f"{adj.name} does not induce {monad.name}")


def psi_one_cell(c, source_adj=None, target_bundle=None):
    """Lift ``(B, psi)`` to algebras.

    ``source_adj`` is any adjunction inducing the source monad (default: its
    free/forgetful adjunction); the target is always the category of algebras.
    """
    if source_adj is None:
        source_adj = em_category(c.source).adjunction
    else:
        _check_induces(source_adj, c.source)
    if target_bundle is None:
        target_bundle = em_category(c.target)
    B, psi = c.carrier, c.psi
    F, U, eps = source_adj.left, source_adj.right, source_adj.counit
    Et = target_bundle.category
    D = B.cod
    X = F.cod
    obj = {}
    for x in X.objects:
        ux = U.ob(x)
        obj[x] = Et.obj(B.ob(ux), D.compose(B.ar(U.ar(eps[x])), psi[ux]))
    mor = {m.id: Et.lift(B.ar(U.ar(m.id)), obj[m.dom], obj[m.cod]) for m in X.morphisms}
    Bhat = Functor(f"{B.name}^", X, Et, obj, mor)
    Ft = target_bundle.free
    lam = NatTrans(f"lam^{B.name}", Ft * B, Bhat * F,
                   {x: Et.lift(psi[x], Ft.ob(B.ob(x)), obj[F.ob(x)])
                    for x in B.dom.objects})
    out = AdjOneCell(source_adj, target_bundle.adjunction, B, Bhat, lam,
                     name=f"psi({c.name})")
    back = target_bundle.forget * lam
    w = nat_diff(back, psi)
    if w is not None:
        raise ConstructionError("forgetting the lifted lambda does not give psi back", (w,))
    return out


def psi_two_cell(t, source=None, target=None):
    """``theta`` to ``(theta, theta^)`` with ``theta^`` the lifted components."""
    a = source or psi_one_cell(t.source)
    b = target or psi_one_cell(t.target)
    U = a.source.right
    Et = a.bottom.cod
    theta = t.theta
    hat = NatTrans(f"{theta.name}^", a.bottom, b.bottom,
                   {x: Et.lift(theta[U.ob(x)], a.bottom.ob(x), b.bottom.ob(x))
                    for x in a.bottom.dom.objects})
    return AdjTwoCell(a, b, theta, hat, name=f"psi({t.name})")


def is_em_adjunction(adj):
    return adj.em_of is not None


def transpose_adj_to_mnd(c):
    """Defined on 1-cells between free/forgetful adjunctions."""
    if not (is_em_adjunction(c.source) and is_em_adjunction(c.target)):
        raise DomainError(f"{c.name} does not run between algebra adjunctions")
    return phi_one_cell(c)


def transpose_mnd_to_adj(c):
    return psi_one_cell(c)
