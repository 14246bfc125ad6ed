"""1-cells and 2-cells between adjunctions and between monads.

An adjunction 1-cell ``(J, V, lam)`` goes from ``L -| R`` (``C -> X``) to
``Lb -| Rb`` (``D -> Y``) with ``lam: Lb J => V L``; its mate
``rho: J R => Rb V`` must be invertible.  A monad 1-cell ``(B, psi)`` goes from
``(C, S)`` to ``(D, T)`` with ``psi: T B => B S``.
"""
from catkit.errors import ConstructionError, StructuralError
from catkit.core import (NatTrans, ValidationReport, compose_functors,
                         identity_functor, identity_nat, is_invertible,
                         validate_functor, validate_nat_trans, vcomp)
from catkit.structures import identity_adjunction, identity_monad


def mate(theta, source, target, top, bottom):
    """``theta: Lb F => G L`` to ``F R => Rb G``."""
    R, Rb = source.right, target.right
    return retype(vcomp(Rb * bottom * source.counit,
                        Rb * theta * R,
                        target.unit * top * R),
                  f"mate({theta.name})", top * R, Rb * bottom)


def left_mate(rho, source, target, top, bottom):
    """Inverse of ``mate``: ``rho: F R => Rb G`` to ``Lb F => G L``."""
    L, Lb = source.left, target.left
    return retype(vcomp(target.counit * bottom * L,
                        Lb * rho * L,
                        Lb * top * source.unit),
                  f"lmate({rho.name})", Lb * top, bottom * L)


def retype(t, name, source, target):
    """Same components, stated against the given (extensionally equal) functors."""
    return NatTrans(name, source, target, t.components)


class AdjOneCell:
    def __init__(self, source, target, top, bottom, lam, name="", check=True):
        self.source = source
        self.target = target
        self.top = top
        self.bottom = bottom
        self.lam = lam
        self.name = name or f"({top.name},{bottom.name})"
        self._rho = None
        self._rho_inv = None
        if check:
            rep = validate_adj_one_cell(self)
            if rep.structural:
                raise StructuralError(f"{self.name}: {rep.violations[0]}")
            rep.raise_if_failed()

    @property
    def rho(self):
        if self._rho is None:
            self._rho = mate(self.lam, self.source, self.target, self.top, self.bottom)
        return self._rho

    @property
    def rho_inv(self):
        if self._rho_inv is None:
            inv = is_invertible(self.rho)
            if not inv:
                raise ConstructionError(f"mate of {self.name} is not invertible",
                                        (inv.witness,))
            self._rho_inv = inv.inverse
        return self._rho_inv

    def __eq__(self, other):
        if not isinstance(other, AdjOneCell):
            return NotImplemented
        return (self.top == other.top and self.bottom == other.bottom
                and self.lam == other.lam and self.source == other.source
                and self.target == other.target)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"AdjOneCell({self.name})"


def validate_adj_one_cell(c):
    rep = ValidationReport(f"adjunction 1-cell {c.name}")
    L, Lb = c.source.left, c.target.left
    J, V = c.top, c.bottom
    if not (J.dom == L.dom and J.cod == Lb.dom and V.dom == L.cod and V.cod == Lb.cod):
        rep.add("cell-shape", (J.name, V.name), structural=True)
        return rep
    for f in (J, V):
        rep.violations += validate_functor(f).violations
    if rep.violations:
        return rep
    if not (c.lam.source.same_maps(Lb * J) and c.lam.target.same_maps(V * L)):
        rep.add("lambda-shape", (c.lam.name,), structural=True)
        return rep
    rep.violations += validate_nat_trans(c.lam).violations
    if rep.violations:
        return rep
    inv = is_invertible(c.rho)
    if not inv:
        rep.add("mate-invertible", (inv.witness,))
    else:
        c._rho_inv = inv.inverse
    return rep


class MndOneCell:
    def __init__(self, source, target, carrier, psi, name="", check=True):
        self.source = source
        self.target = target
        self.carrier = carrier
        self.psi = psi
        self.name = name or f"({carrier.name},{psi.name})"
        if check:
            rep = validate_mnd_one_cell(self)
            if rep.structural:
                raise StructuralError(f"{self.name}: {rep.violations[0]}")
            rep.raise_if_failed()

    @property
    def top(self):
        return self.carrier

    def __eq__(self, other):
        if not isinstance(other, MndOneCell):
            return NotImplemented
        return (self.carrier == other.carrier and self.psi == other.psi
                and self.source == other.source and self.target == other.target)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"MndOneCell({self.name})"


def validate_mnd_one_cell(c):
    rep = ValidationReport(f"monad 1-cell {c.name}")
    S, T, B, psi = c.source.endo, c.target.endo, c.carrier, c.psi
    if not (B.dom == S.dom and B.cod == T.dom):
        rep.add("cell-shape", (B.name,), structural=True)
        return rep
    rep.violations += validate_functor(B).violations
    if rep.violations:
        return rep
    if not (psi.source.same_maps(T * B) and psi.target.same_maps(B * S)):
        rep.add("psi-shape", (psi.name,), structural=True)
        return rep
    rep.violations += validate_nat_trans(psi).violations
    if rep.violations:
        return rep
    D = B.cod
    muS, etaS = c.source.mult, c.source.unit
    muT, etaT = c.target.mult, c.target.unit
    for x in B.dom.objects:
        bx = B.ob(x)
        lhs = D.compose(psi[x], muT[bx])
        rhs = D.compose_all(B.ar(muS[x]), psi[S.ob(x)], T.ar(psi[x]))
        if lhs != rhs:
            rep.add("psi-multiplication", (x,))
        if D.compose(psi[x], etaT[bx]) != B.ar(etaS[x]):
            rep.add("psi-unit", (x,))
    return rep


class AdjTwoCell:
    def __init__(self, source, target, alpha, beta, name="", check=True):
        self.source = source
        self.target = target
        self.alpha = alpha
        self.beta = beta
        self.name = name or f"({alpha.name},{beta.name})"
        if check:
            validate_adj_two_cell(self).raise_if_failed()

    def __eq__(self, other):
        if not isinstance(other, AdjTwoCell):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    __hash__ = object.__hash__


def validate_adj_two_cell(t):
    """Both compatibility conditions, via ``lam`` and via ``rho``, are checked."""
    rep = ValidationReport(f"adjunction 2-cell {t.name}")
    c, d = t.source, t.target
    alpha, beta = t.alpha, t.beta
    if not (alpha.source.same_maps(c.top) and alpha.target.same_maps(d.top)
            and beta.source.same_maps(c.bottom) and beta.target.same_maps(d.bottom)):
        rep.add("two-cell-shape", (alpha.name, beta.name), structural=True)
        return rep
    for s in (alpha, beta):
        rep.violations += validate_nat_trans(s).violations
    if rep.violations:
        return rep
    L, Lb, R, Rb = c.source.left, c.target.left, c.source.right, c.target.right
    Y, D = Lb.cod, Rb.cod
    for x in L.dom.objects:
        lhs = Y.compose(beta[L.ob(x)], c.lam[x])
        rhs = Y.compose(d.lam[x], Lb.ar(alpha[x]))
        if lhs != rhs:
            rep.add("compat-lambda", (x,))
    for y in R.dom.objects:
        lhs = D.compose(Rb.ar(beta[y]), c.rho[y])
        rhs = D.compose(d.rho[y], alpha[R.ob(y)])
        if lhs != rhs:
            rep.add("compat-rho", (y,))
    return rep


class MndTwoCell:
    def __init__(self, source, target, theta, name="", check=True):
        self.source = source
        self.target = target
        self.theta = theta
        self.name = name or theta.name
        if check:
            validate_mnd_two_cell(self).raise_if_failed()

    def __eq__(self, other):
        if not isinstance(other, MndTwoCell):
            return NotImplemented
        return self.theta == other.theta

    __hash__ = object.__hash__


def validate_mnd_two_cell(t):
    rep = ValidationReport(f"monad 2-cell {t.name}")
    a, b, theta = t.source, t.target, t.theta
    if not (theta.source.same_maps(a.carrier) and theta.target.same_maps(b.carrier)):
        rep.add("two-cell-shape", (theta.name,), structural=True)
        return rep
    rep.violations += validate_nat_trans(theta).violations
    if rep.violations:
        return rep
    S, T = a.source.endo, a.target.endo
    D = a.carrier.cod
    for x in a.carrier.dom.objects:
        lhs = D.compose(b.psi[x], T.ar(theta[x]))
        rhs = D.compose(theta[S.ob(x)], a.psi[x])
        if lhs != rhs:
            rep.add("compat-psi", (x,))
    return rep


def identity_adj_cell(adj):
    C, X = adj.left.dom, adj.left.cod
    one_c, one_x = identity_functor(C), identity_functor(X)
    return AdjOneCell(adj, adj, one_c, one_x, identity_nat(adj.left),
                      name=f"1_{adj.name}")


def identity_mnd_cell(m):
    one = identity_functor(m.base)
    return MndOneCell(m, m, one, identity_nat(m.endo), name=f"1_{m.name}")


def compose_adj_cells(second, first, check=True):
    """``(J', V', lam') . (J, V, lam) = (J'J, V'V, V'lam . lam'J)``."""
    J, V = compose_functors(second.top, first.top), compose_functors(second.bottom, first.bottom)
    lam = retype(vcomp(second.bottom * first.lam, second.lam * first.top),
                 f"{second.lam.name}*{first.lam.name}",
                 second.target.left * J, V * first.source.left)
    return AdjOneCell(first.source, second.target, J, V, lam,
                      name=f"{second.name}.{first.name}", check=check)


def compose_mnd_cells(second, first, check=True):
    """``(B', psi') . (B, psi) = (B'B, B'psi . psi'B)``."""
    B = compose_functors(second.carrier, first.carrier)
    psi = retype(vcomp(second.carrier * first.psi, second.psi * first.carrier),
                 f"{second.psi.name}*{first.psi.name}",
                 second.target.endo * B, B * first.source.endo)
    return MndOneCell(first.source, second.target, B, psi,
                      name=f"{second.name}.{first.name}", check=check)


def unit_adj_cell(cat):
    return identity_adj_cell(identity_adjunction(cat))


def unit_mnd_cell(cat):
    return identity_mnd_cell(identity_monad(cat))
