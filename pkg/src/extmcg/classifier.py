"""Classification of extendable mapping class groups for the supported
families of standardly embedded sphere products.

Every result cites tags from STATEMENTS, a registry of the mathematical
facts this library encodes; fields the encoded statements do not
determine are explicit Unknown values carrying a reason, never guesses.
Groups of homotopy spheres (Theta_n) stay symbolic: nothing here computes
or looks up their orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ambient_geom, f2_forms, homotopy_tables, sl2z, smallgrp


class UnsupportedFamilyError(ValueError):
    pass


class FamilyParameterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# registry of encoded statements


STATEMENTS: dict[str, str] = {
    "unknot-trivial":
        "For n >= 5, every extendable mapping class of the standardly "
        "embedded n-sphere in the (n+2)-sphere is trivial.",
    "torus-even-products":
        "The extendable mapping class group of the standardly embedded torus "
        "in the 4-sphere consists exactly of the SL(2,Z) matrices "
        "(a b / c d) with a*b and c*d both even.",
    "odd-image":
        "For odd p >= 3, the image of the extendable mapping class group of "
        "S^p x S^p in S^(2p+2) on middle homology is the subgroup of SL(2,Z) "
        "of matrices congruent to the identity or the quarter turn V mod 2.",
    "odd-kernel":
        "For odd p >= 3, an extendable class of S^p x S^p in S^(2p+2) acting "
        "trivially on middle homology is pseudo-isotopic to the identity.",
    "odd-total":
        "For odd p >= 1, the extendable mapping class group of S^p x S^p in "
        "S^(2p+2) is isomorphic to the even-row-product subgroup of SL(2,Z).",
    "even-kernel":
        "For even p >= 4, the extendable classes of S^p x S^p in S^(2p+2) "
        "acting trivially on homology form a Klein four-group generated by "
        "the two one-sided coordinate reflections.",
    "even-image":
        "For even p >= 4, the homology image of the extendable mapping class "
        "group of S^p x S^p in S^(2p+2) is the Klein four-group generated by "
        "the factor swap and -identity.",
    "even-total":
        "For even p >= 4, the extendable mapping class group of S^p x S^p in "
        "S^(2p+2) is the direct product of the dihedral group of order eight "
        "with a cyclic group of order two.",
    "even-sequence":
        "For even p >= 4, the extendable mapping class group of S^p x S^p is "
        "an extension of its Klein four homology image by its Klein four "
        "homology-trivial kernel, of order 16.",
    "even-splits-computed":
        "In the order-16 model ((Z2 x Z2) x| swap) x Z2 of the even case, the "
        "homology-trivial Klein subgroup has a complement; the extension "
        "splits.  Verified by exhaustive subgroup search on the model, not "
        "asserted as part of the encoded classification.",
    "dim2-image":
        "For S^2 x S^2 in S^6, both generators of the pseudo-isotopy mapping "
        "class group Z2 + Z2 admit representatives that extend to the "
        "6-sphere, so the homology image of the extendable group is all of "
        "Z2 + Z2.",
    "unequal-image":
        "For 2 <= p < q, the image of the extendable mapping class group of "
        "S^p x S^q in S^(p+q+2) on the two middle homology generators is the "
        "order-2 group generated by simultaneous reversal of both.",
    "adjacent-split":
        "For the product of spheres of adjacent dimensions p-2 and p-1 in "
        "S^(2p-1), with p = 6 mod 8 and p >= 9, the extendable mapping class "
        "group is a split extension of Z2 by Z2, hence Klein four.",
    "sdiff-sequence":
        "For p >= 3, the homology-trivial pseudo-isotopy classes of S^p x S^p "
        "fit in an extension 0 -> Theta_(2p+1) -> pi_0 SDiff -> "
        "Hom(H_p, SPi_p(SO(p))) -> 0, with Theta_(2p+1) the group of "
        "homotopy (2p+1)-spheres, kept symbolic here.",
    "so-tables":
        "SPi_p(SO(p)) for p >= 3 depends only on p mod 8, namely Z2+Z2, Z2, "
        "Z2, Z, Z2, 0, Z2, Z for residues 0..7, except that it is trivial at "
        "p = 6.  For even p >= 4, pi_p(SO(p+1)) is Z2+Z2 at p = 0 mod 8 and "
        "Z2 otherwise; pi_p(SO(p+2)) is Z2 at p = 0 mod 8 and 0 otherwise.",
    "arf-zero-standard":
        "The quadratic refinement carried by the standardly embedded product "
        "of equal-dimensional spheres vanishes on the two standard basis "
        "cycles and has Arf invariant zero; homology actions of extendable "
        "classes preserve it.",
    "arf-census":
        "A 2k-dimensional nondegenerate symplectic space over GF(2) has "
        "2^(2k) quadratic refinements, of which 2^(2k-1) + 2^(k-1) have Arf "
        "invariant 0; the Arf invariant is the value a refinement takes on a "
        "strict majority of vectors.",
    "sp-census":
        "Sp(2,2) has order 6 and Sp(4,2) order 720; the refinements of Arf 0 "
        "and 1 form single orbits, with stabilizer orders 72 and 120 at k=2.",
    "gammav2-presentation":
        "The even-row-product subgroup of SL(2,Z) is generated by "
        "V = (0 -1 / 1 0) and T = (1 2 / 0 1) with defining relations "
        "V^4 = Id and V^2 T = T V^2; modulo +-Id it is the free product of "
        "Z2 and Z.",
    "mod2-membership":
        "An SL(2,Z) matrix has both row products even exactly when its mod-2 "
        "reduction is the identity or the quarter turn V.",
    "d8-presentation":
        "The group presented by gens a, b, u with relations a^2, b^2, u^2, "
        "ab = ba, au = ub is the dihedral group of order eight.",
    "omega-action":
        "The ambient rotation restricting to (a, b) -> (R(b), a) has "
        "determinant +1 and order 4, and induces the quarter turn "
        "(0 -1 / 1 0) on middle homology.",
    "omega-hat-action":
        "For even p, the ambient involution restricting to the factor swap "
        "(a, b) -> (b, a) has determinant +1 and induces (0 1 / 1 0).",
    "omega-prime-action":
        "The diagonal ambient involution restricting to (a, b) -> "
        "(R(a), R(b)) has determinant +1; for equal factor dimensions it "
        "induces -identity on middle homology.",
}


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class KnotFamily:
    """A supported family of standardly embedded sphere (products)."""

    kind: str
    params: tuple[int, ...]

    @classmethod
    def unknot_sphere(cls, n: int) -> "KnotFamily":
        if n < 5:
            raise FamilyParameterError(f"n = {n} must be at least 5")
        return cls("unknot-sphere", (n,))

    @classmethod
    def equal_product(cls, p: int) -> "KnotFamily":
        if p < 1:
            raise FamilyParameterError(f"p = {p} must be at least 1")
        return cls("equal-product", (p,))

    @classmethod
    def unequal_product(cls, p: int, q: int) -> "KnotFamily":
        if not 2 <= p < q:
            raise FamilyParameterError(f"need 2 <= p < q, got p = {p}, q = {q}")
        return cls("unequal-product", (p, q))

    @classmethod
    def adjacent_product(cls, p: int) -> "KnotFamily":
        if p < 9 or p % 8 != 6:
            raise FamilyParameterError(
                f"p = {p} must be at least 9 and congruent to 6 mod 8")
        return cls("adjacent-product", (p,))

    def describe(self) -> str:
        if self.kind == "unknot-sphere":
            n = self.params[0]
            return f"S^{n} in S^{n + 2}"
        if self.kind == "equal-product":
            p = self.params[0]
            return f"S^{p} x S^{p} in S^{2 * p + 2}"
        if self.kind == "unequal-product":
            p, q = self.params
            return f"S^{p} x S^{q} in S^{p + q + 2}"
        p = self.params[0]
        return f"S^{p - 2} x S^{p - 1} in S^{2 * p - 1}"


# ---------------------------------------------------------------------------
# group descriptors


@dataclass(frozen=True)
class Unknown:
    reason: str


def _gamma_presentation() -> smallgrp.Presentation:
    return smallgrp.parse_presentation("gens: V,T; rels: V^4, V^2 T V^-2 T^-1")


@dataclass(frozen=True)
class GroupDescriptor:
    """Named group with an attached concrete realization.

    Finite names carry a multiplication table; the infinite matrix group
    carries its presentation (relators checkable against actual matrices).
    """

    name: str
    realization: smallgrp.MulTableGroup | smallgrp.Presentation

    _BUILDERS = {
        "trivial": lambda: smallgrp.cyclic(1),
        "Z2": lambda: smallgrp.cyclic(2),
        "Z2xZ2": smallgrp.klein,
        "D8xZ2": lambda: smallgrp.direct_product(smallgrp.dihedral(8), smallgrp.cyclic(2)),
        "GammaV2": _gamma_presentation,
    }

    @classmethod
    def of(cls, name: str) -> "GroupDescriptor":
        if name not in cls._BUILDERS:
            raise UnsupportedFamilyError(f"no canonical realization for {name!r}")
        return cls(name, cls._BUILDERS[name]())

    def order(self) -> int | None:
        if isinstance(self.realization, smallgrp.MulTableGroup):
            return self.realization.order
        return None

    def verify_realization(self) -> bool:
        """Realization matches the name: table isomorphism for finite names,
        relators holding on the actual matrices for the infinite one."""
        if self.name == "GammaV2":
            pres = self.realization
            if not isinstance(pres, smallgrp.Presentation):
                return False
            mats = {"V": sl2z.V, "T": sl2z.T}
            for rel in pres.relators:
                acc = sl2z.IDENTITY
                for g, s in rel:
                    m = mats[pres.generators[g]]
                    acc = acc * (m if s == 1 else m.inverse())
                if acc != sl2z.IDENTITY:
                    return False
            return all(sl2z.is_member(m) for m in mats.values())
        if not isinstance(self.realization, smallgrp.MulTableGroup):
            return False
        ok, _ = smallgrp.is_isomorphic(self.realization, self._BUILDERS[self.name]())
        return ok


# ---------------------------------------------------------------------------
# classification results


@dataclass(frozen=True)
class ClassificationResult:
    family: KnotFamily
    image: GroupDescriptor | Unknown
    kernel: GroupDescriptor | Unknown
    total: GroupDescriptor | Unknown
    splits: bool | Unknown
    citations: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.citations:
            raise ValueError("a classification must cite at least one statement")
        for tag in self.citations:
            if tag not in STATEMENTS:
                raise ValueError(f"citation {tag!r} is not a registered statement")
        parts = [self.kernel, self.image, self.total]
        if all(isinstance(g, GroupDescriptor) for g in parts):
            orders = [g.order() for g in parts]
            if all(o is not None for o in orders) and orders[0] * orders[1] != orders[2]:
                raise ValueError(
                    f"orders are inconsistent: |kernel| * |image| = "
                    f"{orders[0]} * {orders[1]} != |total| = {orders[2]}")

    def to_json(self) -> dict:
        out: dict = {"family": {"kind": self.family.kind,
                                "params": list(self.family.params)},
                     "manifold": self.family.describe()}
        for label, value in (("image", self.image), ("kernel", self.kernel),
                             ("total", self.total)):
            if isinstance(value, Unknown):
                out[label] = None
                out[f"{label}_reason"] = value.reason
            else:
                out[label] = value.name
        if isinstance(self.splits, Unknown):
            out["splits"] = None
            out["splits_reason"] = self.splits.reason
        else:
            out["splits"] = self.splits
        out["citations"] = list(self.citations)
        out["notes"] = list(self.notes)
        return out


def _even_model_splits() -> bool:
    group = smallgrp.build_E_even()
    gens = smallgrp.E_EVEN_GENS
    kernel = group.closure({gens["delta1"], gens["delta2"]})
    return smallgrp.has_complement(group, kernel)


def classify(family: KnotFamily) -> ClassificationResult:
    """Image / kernel / total of the homology action on extendable classes."""
    if family.kind == "unknot-sphere":
        triv = GroupDescriptor.of("trivial")
        return ClassificationResult(
            family, image=triv, kernel=triv, total=triv, splits=True,
            citations=("unknot-trivial",))

    if family.kind == "equal-product":
        p = family.params[0]
        if p == 1:
            return ClassificationResult(
                family,
                image=GroupDescriptor.of("GammaV2"),
                kernel=GroupDescriptor.of("trivial"),
                total=GroupDescriptor.of("GammaV2"),
                splits=True,
                citations=("torus-even-products", "odd-total"),
                notes=("the classes are exactly their matrices here, so the "
                       "homology action is injective with the stated image",))
        if p == 2:
            return ClassificationResult(
                family,
                image=GroupDescriptor.of("Z2xZ2"),
                kernel=Unknown("homology-trivial extendable classes in "
                               "dimension 2 are not determined here"),
                total=Unknown("only the homology image is determined in "
                              "dimension 2"),
                splits=Unknown("extension structure unknown in dimension 2"),
                citations=("dim2-image",),
                notes=("both pseudo-isotopy generators extend to the ambient "
                       "6-sphere",))
        if p % 2:
            return ClassificationResult(
                family,
                image=GroupDescriptor.of("GammaV2"),
                kernel=GroupDescriptor.of("trivial"),
                total=GroupDescriptor.of("GammaV2"),
                splits=True,
                citations=("odd-image", "odd-kernel", "odd-total"))
        return ClassificationResult(
            family,
            image=GroupDescriptor.of("Z2xZ2"),
            kernel=GroupDescriptor.of("Z2xZ2"),
            total=GroupDescriptor.of("D8xZ2"),
            splits=_even_model_splits(),
            citations=("even-image", "even-kernel", "even-total",
                       "even-sequence", "even-splits-computed"),
            notes=("splits is computed on the order-16 model by subgroup "
                   "search, not quoted from the classification",))

    if family.kind == "unequal-product":
        return ClassificationResult(
            family,
            image=GroupDescriptor.of("Z2"),
            kernel=Unknown("homology-trivial extendable classes are not "
                           "determined for unequal dimensions"),
            total=Unknown("only the homology image is determined for "
                          "unequal dimensions"),
            splits=Unknown("extension structure unknown for unequal "
                           "dimensions"),
            citations=("unequal-image",))

    if family.kind == "adjacent-product":
        p = family.params[0]
        kernel_group = homotopy_tables.pi_p_so_p_residue5(p - 1)
        assert kernel_group == homotopy_tables.Z2
        return ClassificationResult(
            family,
            image=GroupDescriptor.of("Z2"),
            kernel=GroupDescriptor.of("Z2"),
            total=GroupDescriptor.of("Z2xZ2"),
            splits=True,
            citations=("adjacent-split", "so-tables"))

    raise UnsupportedFamilyError(f"unknown family kind {family.kind!r}")


# ---------------------------------------------------------------------------
# exact sequence reports


@dataclass(frozen=True)
class ExactSequenceReport:
    """Short exact sequence attached to a family, symbolic where needed.

    orders aligns with terms; None marks infinite or symbolic entries.
    When kernel, middle and quotient orders are all finite the product
    consistency |kernel| * |quotient| = |middle| is asserted on build.
    """

    terms: tuple[str, ...]
    orders: tuple[int | None, ...]
    splits: bool | None
    citations: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.terms) != 5 or len(self.orders) != 5:
            raise ValueError("expected a five-term sequence 0 -> K -> E -> Q -> 0")
        _, k, e, q, _ = self.orders
        if None not in (k, e, q) and k * q != e:
            raise ValueError(f"orders are inconsistent: {k} * {q} != {e}")
        for tag in self.citations:
            if tag not in STATEMENTS:
                raise ValueError(f"citation {tag!r} is not a registered statement")


def exact_sequence_report(family: KnotFamily) -> ExactSequenceReport:
    if family.kind == "equal-product":
        p = family.params[0]
        if p >= 4 and p % 2 == 0:
            return ExactSequenceReport(
                terms=("0", "Z2 + Z2", "D8 x Z2", "Z2 + Z2", "0"),
                orders=(1, 4, 16, 4, 1),
                splits=_even_model_splits(),
                citations=("even-sequence", "even-splits-computed"),
                notes=("splits computed on the order-16 model",))
        if p >= 3 and p % 2:
            quot = homotopy_tables.hom_to(2, homotopy_tables.s_pi_p_so_p(p))
            return ExactSequenceReport(
                terms=("0", f"Theta_{2 * p + 1}",
                       f"pi_0 SDiff(S^{p} x S^{p})",
                       f"Hom(Z^2, {homotopy_tables.s_pi_p_so_p(p)})", "0"),
                orders=(1, None, None, quot.order(), 1),
                splits=None,
                citations=("sdiff-sequence", "so-tables", "odd-kernel"),
                notes=("Theta terms stay symbolic; no homotopy sphere group "
                       "orders are computed",
                       "restricted to extendable classes the kernel term "
                       "vanishes"))
        raise UnsupportedFamilyError(
            f"no sequence report for equal products with p = {p}")
    if family.kind == "adjacent-product":
        return ExactSequenceReport(
            terms=("0", "Z2", "Z2 + Z2", "Z2", "0"),
            orders=(1, 2, 4, 2, 1),
            splits=True,
            citations=("adjacent-split",))
    raise UnsupportedFamilyError(f"no sequence report for {family.kind!r}")


# ---------------------------------------------------------------------------
# cross-validation against the other modules


@dataclass(frozen=True)
class CrossCheck:
    name: str
    passed: bool
    detail: str


def _mod2_matrix(m: sl2z.UniModMat2) -> tuple[tuple[int, ...], ...]:
    return ((m.a % 2, m.b % 2), (m.c % 2, m.d % 2))


def cross_validate(family: KnotFamily) -> list[CrossCheck]:
    """Consistency of the classification with the algebra modules.

    Odd equal products: the mod-2 matrix classes of the image group must
    be exactly the symplectic stabilizer of the vanishing refinement, and
    the ambient rotation must induce a member matrix.  Even equal
    products: the order-16 model must match D8 x Z2 and the two ambient
    involutions must generate the declared Klein image.
    """
    if family.kind != "equal-product":
        raise UnsupportedFamilyError("cross validation covers equal products only")
    p = family.params[0]
    checks: list[CrossCheck] = []

    if p % 2:
        q = f2_forms.QuadraticRefinement(f2_forms.standard_space(1), (0, 0))
        stab = {s.matrix for s in f2_forms.stabilizer(q)}
        classes = {_mod2_matrix(sl2z.IDENTITY), _mod2_matrix(sl2z.V)}
        checks.append(CrossCheck(
            "stabilizer-matches-mod2-image",
            stab == classes,
            f"stabilizer {sorted(stab)} vs mod-2 classes {sorted(classes)}"))
        omega = ambient_geom.build_omega(p)
        action = ambient_geom.induced_homology_action(
            ambient_geom.restrict_to_product(omega, p, p))
        mat = action.to_unimodular()
        checks.append(CrossCheck(
            "omega-induces-v",
            mat == sl2z.V and sl2z.is_member(mat),
            f"induced action {mat.rows}"))
    else:
        hat = ambient_geom.induced_homology_action(
            ambient_geom.restrict_to_product(ambient_geom.build_omega_hat(p), p, p))
        prime = ambient_geom.induced_homology_action(
            ambient_geom.restrict_to_product(ambient_geom.build_omega_prime(p, p), p, p))
        closure = ambient_geom.homology_group_closure([hat, prime])
        expected = {((0, 1), (1, 0)), ((1, 0), (0, 1)),
                    ((-1, 0), (0, -1)), ((0, -1), (-1, 0))}
        checks.append(CrossCheck(
            "induced-actions-generate-klein",
            {m.rows for m in closure} == expected and all(
                (m * m).rows == ((1, 0), (0, 1)) for m in closure),
            f"closure of size {len(closure)}"))
        if p >= 4:
            model = smallgrp.build_E_even()
            target = smallgrp.direct_product(smallgrp.dihedral(8), smallgrp.cyclic(2))
            ok, _ = smallgrp.is_isomorphic(model, target)
            checks.append(CrossCheck(
                "model-is-d8xz2", ok, f"model order {model.order}"))
            gens = smallgrp.E_EVEN_GENS
            kernel = model.closure({gens["delta1"], gens["delta2"]})
            quot = smallgrp.quotient(model, kernel)
            ok_k, _ = smallgrp.is_isomorphic(quot, smallgrp.klein())
            checks.append(CrossCheck(
                "model-quotient-is-klein",
                model.is_normal(kernel) and len(kernel) == 4 and ok_k,
                f"kernel {sorted(kernel)}, quotient order {quot.order}"))
    return checks
