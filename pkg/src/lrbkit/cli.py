"""Command line interface.

    lrbkit <command> --instance <ref> [--field q|fp:<p>] [--format json|text]
                     [--seed-policy min|max]

where <ref> is either ``builtin:<family>?<params>`` or a path to a JSON
instance file; see the instances module for both formats.

Commands:

    info         sizes, orbit counts, class flags, semisimplicity
    idempotents  the idempotent family and its defining properties
    cartan       Cartan invariants over support orbits
    peirce       corner dimensions and characters per comparable pair orbit
    theorem-a    split-semisimplicity vs orbit-count equivalence
    theorem-c    corner == homology tensor identity (CW instances; cube
                 complexes get the strongly simplicial report, arrangements
                 additionally the determinant twist)
    theorem-d    corner == chain sum identity plus radical layers
                 (hereditary instances; connected ones fall back to the
                 first-layer path check)
    theorem-e    flag and derangement module decompositions (lattices)
    derangement  derangement numbers, four routes, plus the character
    rtt          random-to-top spectrum with exact certificates
    verify-all   every applicable check, on one instance or the corpus

JSON output is canonical: sorted keys, no padding, one trailing newline,
exact values rendered as fraction strings.  Exit status: 0 all checks pass,
1 some check failed, 2 bad usage or a malformed instance.

Characters need the rational field; with --field fp:<p> the commands that
would report them (cartan with symmetry, peirce, the theorem and spectrum
commands) either degrade to dimensions (cartan, peirce) or refuse.
"""

import argparse
import json
import sys
from concurrent import futures

from .algebra import (build_cfpoi, cartan_invariants, cartan_orbit_basis_check,
                      comparable_pair_orbits, deletion_isomorphism_check,
                      peirce_component, plain_cartan_matrix, rank_of_rows,
                      saliola_properties_check, theorem_a_report)
from .analysis import (arrangement_det_vs_deg_check, catzero_report,
                       derangement_character, derangement_number, flag_context,
                       paths_layer_check, random_to_top, structure_summary,
                       theorem_c_check, theorem_d_check, theorem_e_checks)
from .fields import parse_field
from .instances import VERIFY_CORPUS, resolve_instance, sign_homomorphism
from .semigroup import check_lrb_axioms, is_connected
from .symmetry import (GroupAction, PermGroup, as_fraction, character_table,
                       isotypic_multiplicities, pidentity, value_to_json)


class Session:
    """Lazily resolved working state for one instance and one field."""

    def __init__(self, inst, field, policy):
        self.inst = inst
        self.field = field
        self.policy = policy
        self._action = None
        self._cfpoi = None
        self._ctx = None

    # --- guards

    def require_band(self, what):
        if self.inst.kind != "lrb":
            raise ValueError("%s needs a band instance, and %r is a lattice "
                             "(theorem-d accepts lattices through their flag "
                             "band)" % (what, self.inst.key))

    def require_lattice(self, what):
        if self.inst.kind != "lattice":
            raise ValueError("%s needs a lattice instance (e.g. "
                             "builtin:boolean-lattice?n=3&group=symmetric), "
                             "and %r is a band" % (what, self.inst.key))

    def require_rational(self, what):
        if self.field.characteristic:
            raise ValueError("%s computes characters and needs the rational "
                             "field; drop --field" % what)

    def _check_characteristic(self, order):
        p = self.field.characteristic
        if p and order % p == 0:
            raise ValueError("field characteristic %d divides the group order %d"
                             % (p, order))

    # --- lazy pieces

    def group_and_gens(self, degree):
        gens = [tuple(g) for g in self.inst.generators] or [pidentity(degree)]
        ag = self.inst.abstract_gens
        if ag is not None:
            ag = [tuple(g) for g in ag]
        return PermGroup.close(gens, degree, abstract_generators=ag)

    def action(self):
        if self._action is None:
            S = self.inst.semigroup
            G = self.group_and_gens(S.size)
            self._check_characteristic(G.order)
            self._action = GroupAction(S, G)
        return self._action

    def cfpoi(self):
        if self._cfpoi is None:
            self._cfpoi = build_cfpoi(self.action(), field=self.field,
                                      policy=self.policy)
        return self._cfpoi

    def ctx(self):
        if self._ctx is None:
            ag = self.inst.abstract_gens
            if ag is not None:
                ag = [tuple(g) for g in ag]
            self._ctx = flag_context(self.inst.lattice,
                                     [tuple(g) for g in self.inst.generators],
                                     abstract_generators=ag)
        return self._ctx

    def flag_cfpoi(self):
        # a lattice instance studied through its flag band
        return build_cfpoi(self._ctx_action(), policy=self.policy)

    def _ctx_action(self):
        return self.ctx().action

    def field_name(self):
        p = self.field.characteristic
        return "q" if not p else "fp:%d" % p


def _support_label(action, X):
    b = min(action.sm.preimage(X))
    return action.S.labels[b] if action.S.labels else "e%d" % b


# ---------------------------------------------------------------------------
# commands; each returns (report, ok)

def cmd_info(sess, args):
    inst = sess.inst
    if inst.kind == "lrb":
        act = sess.action()
        report = {"instance": inst.key, "source": inst.source, "kind": "band"}
        report.update(structure_summary(act))
        report["group_order"] = act.group.order
        # the band algebra is semisimple only for semilattices; the theorem A
        # report covers the invariant subalgebra
        report["semisimple"] = report["elements"] == report["supports"]
        ta = theorem_a_report(act, field=sess.field)
        report["invariant_radical_dim"] = ta["radical_dim"]
        report["invariant_semisimple"] = ta["semisimple"]
        return report, True
    L = inst.lattice
    G = sess.group_and_gens(L.size)
    report = {
        "instance": inst.key,
        "source": inst.source,
        "kind": "lattice",
        "elements": L.size,
        "rank": max(L.rank),
        "atoms": len(L.atoms),
        "group_order": G.order,
        "derangement": derangement_number(L)["value"],
    }
    return report, True


def cmd_idempotents(sess, args):
    sess.require_band("idempotents")
    cf = sess.cfpoi()
    act = cf.action
    orbs, _ = act.support_orbit_index()
    rows = []
    for orb in orbs:
        X = orb[0]
        rows.append({
            "support": X,
            "label": _support_label(act, X),
            "orbit_size": len(orb),
            "seed_terms": len(cf.seeds[X]),
            "idempotent_terms": len(cf.E[X]),
        })
    props = saliola_properties_check(cf)
    report = {"instance": sess.inst.key, "field": sess.field_name(),
              "policy": cf.policy, "orbits": rows, "properties": props}
    ok = all(v is not False for v in props.values())
    return report, ok


def cmd_cartan(sess, args):
    sess.require_band("cartan")
    cf = sess.cfpoi()
    act = cf.action
    report = {"instance": sess.inst.key, "field": sess.field_name(),
              "policy": cf.policy}
    if sess.field.characteristic:
        # dimension data only; multiplicities are a character computation
        report["per_support_matrix"] = plain_cartan_matrix(cf)
        report["support_labels"] = [_support_label(act, X)
                                    for X in range(act.lat.size)]
        return report, True
    data = cartan_invariants(cf)
    report["orbit_labels"] = [_support_label(act, orb[0])
                              for orb in data["orbits"]]
    report["orbit_sizes"] = [len(orb) for orb in data["orbits"]]
    report["matrix"] = data["matrix"]
    return report, True


def _corner_dim(cf, X, Y):
    A = cf.algebra
    rows = []
    for b in range(A.S.size):
        v = A.mul(cf.E[Y], A.mul(A.basis(b), cf.E[X]))
        if v:
            rows.append(A.to_vector(v))
    return rank_of_rows(rows, A.S.size)


def cmd_peirce(sess, args):
    sess.require_band("peirce")
    cf = sess.cfpoi()
    act = cf.action
    pairs, porbs = comparable_pair_orbits(act)
    rows = []
    for orb in porbs:
        X, Y = pairs[orb[0]]
        row = {"X": X, "Y": Y,
               "X_label": _support_label(act, X),
               "Y_label": _support_label(act, Y),
               "orbit_size": len(orb)}
        if sess.field.characteristic:
            row["dim"] = _corner_dim(cf, X, Y)
        else:
            comp = peirce_component(cf, X, Y)
            row["dim"] = comp.dim
            row["stabilizer_order"] = comp.group.order
            row["character"] = comp.char.to_json()
            row["method"] = comp.method
        rows.append(row)
    report = {"instance": sess.inst.key, "field": sess.field_name(),
              "policy": cf.policy, "pair_orbits": rows}
    return report, True


def cmd_theorem_a(sess, args):
    sess.require_band("theorem-a")
    report = dict(theorem_a_report(sess.action(), field=sess.field))
    report["instance"] = sess.inst.key
    return report, report["equivalence_holds"]


def cmd_theorem_c(sess, args):
    sess.require_rational("theorem-c")
    inst = sess.inst
    if inst.kind == "lattice":
        raise ValueError("theorem-c applies to CW bands (arrangements, cube "
                         "complexes); lattice instances are covered by "
                         "theorem-d and theorem-e")
    cf = sess.cfpoi()
    if inst.cube is not None:
        report = catzero_report(cf, instance=inst.key)
        return report, report["all_pass"]
    if inst.det_signs is not None:
        G = cf.action.group
        det = sign_homomorphism(G, [tuple(g) for g in inst.generators],
                                inst.det_signs)
        tc = theorem_c_check(cf, instance=inst.key)
        dd = arrangement_det_vs_deg_check(cf, det, instance=inst.key)
        ok = tc["all_pass"] and dd["all_pass"]
        return {"instance": inst.key, "theorem_c": tc, "det_twist": dd,
                "all_pass": ok}, ok
    report = theorem_c_check(cf, instance=inst.key)
    return report, report["all_pass"]


def cmd_theorem_d(sess, args):
    sess.require_rational("theorem-d")
    inst = sess.inst
    if inst.kind == "lattice":
        report = theorem_d_check(sess.flag_cfpoi(), instance=inst.key)
        return report, report["all_pass"]
    cf = sess.cfpoi()
    try:
        report = theorem_d_check(cf, instance=inst.key)
        return report, report["all_pass"]
    except ValueError as e:
        if not is_connected(cf.action.S):
            raise
        # not hereditary; the first radical layer statement still applies
        report = paths_layer_check(cf, instance=inst.key)
        report["fallback"] = "not hereditary (%s); checked rad/rad^2 only" % e
        return report, report["all_pass"]


def cmd_theorem_e(sess, args):
    sess.require_rational("theorem-e")
    sess.require_lattice("theorem-e")
    inst = sess.inst
    ag = inst.abstract_gens
    report = theorem_e_checks(inst.lattice,
                              [tuple(g) for g in inst.generators],
                              table_family=inst.table_family,
                              abstract_generators=[tuple(g) for g in ag] if ag else None,
                              instance=inst.key)
    return report, report["all_pass"]


def cmd_derangement(sess, args):
    sess.require_rational("derangement")
    sess.require_lattice("derangement")
    inst = sess.inst
    L = inst.lattice
    report = {"instance": inst.key}
    report.update(derangement_number(L))
    ctx = sess.ctx()
    chi = derangement_character(L, context=ctx)
    report["character"] = chi.to_json()
    if inst.table_family is not None:
        table = character_table(ctx.lattice_group, inst.table_family)
        report["isotypic"] = {
            name: value_to_json(m)
            for name, m in zip(table.names,
                               isotypic_multiplicities(table, chi))}
    return report, True


def cmd_rtt(sess, args):
    sess.require_rational("rtt")
    sess.require_lattice("rtt")
    inst = sess.inst
    rep = random_to_top(inst.lattice, [tuple(g) for g in inst.generators],
                        instance=inst.key)
    report = rep.to_json()
    report["instance"] = inst.key
    return report, rep.all_pass


# ---------------------------------------------------------------------------
# the all-in verification walk

def _band_checks(inst, policy):
    checks = {}
    S = inst.semigroup
    ok, witness = check_lrb_axioms(S)
    if not ok:
        raise AssertionError("axioms fail: %r" % (witness,))
    checks["axioms"] = True
    gens = [tuple(g) for g in inst.generators] or [pidentity(S.size)]
    ag = inst.abstract_gens
    G = PermGroup.close(gens, S.size,
                        abstract_generators=[tuple(g) for g in ag] if ag else None)
    act = GroupAction(S, G)     # validates automorphy and sigma equivariance
    checks["support_lattice"] = True
    cf = build_cfpoi(act, policy=policy)
    saliola_properties_check(cf)
    checks["saliola_properties"] = True
    checks["cartan_orbit_basis"] = cartan_orbit_basis_check(cf)["matches"]
    checks["theorem_a"] = theorem_a_report(act)["equivalence_holds"]

    # seed choice must not leak into the corners
    other = build_cfpoi(act, policy="max" if policy == "min" else "min")
    pairs, porbs = comparable_pair_orbits(act)
    for orb in porbs:
        X, Y = pairs[orb[0]]
        if _corner_dim(cf, X, Y) != _corner_dim(other, X, Y):
            raise AssertionError("corner dims depend on the seed policy at "
                                 "(%d,%d)" % (X, Y))
    checks["seed_policy_independent"] = True

    if S.size <= 40 and act.lat.size > 1:
        X = next(Z for Z in range(act.lat.size) if act.lat.rank[Z] == 1)
        deletion_isomorphism_check(cf, X)
        checks["deletion_isomorphism"] = True

    if inst.cube is not None:
        checks["catzero"] = catzero_report(cf, instance=inst.key)["all_pass"]
    elif inst.det_signs is not None:
        det = sign_homomorphism(G, [tuple(g) for g in inst.generators],
                                inst.det_signs)
        checks["theorem_c"] = theorem_c_check(cf, instance=inst.key)["all_pass"]
        checks["det_twist"] = arrangement_det_vs_deg_check(
            cf, det, instance=inst.key)["all_pass"]
    else:
        try:
            checks["theorem_c"] = theorem_c_check(cf, instance=inst.key)["all_pass"]
        except ValueError:
            pass                # not a CW band; nothing to check here

    try:
        checks["theorem_d"] = theorem_d_check(cf, instance=inst.key)["all_pass"]
    except ValueError:
        if is_connected(S):
            checks["rad_layer_paths"] = paths_layer_check(
                cf, instance=inst.key)["all_pass"]
    return checks


def _lattice_checks(inst, policy):
    checks = {}
    L = inst.lattice
    derangement_number(L)       # raises when the four routes disagree
    checks["derangement_routes"] = True
    gens = [tuple(g) for g in inst.generators]
    ag = inst.abstract_gens
    checks["theorem_e"] = theorem_e_checks(
        L, gens, table_family=inst.table_family,
        abstract_generators=[tuple(g) for g in ag] if ag else None,
        instance=inst.key)["all_pass"]
    checks["rtt"] = random_to_top(L, gens, instance=inst.key).all_pass
    return checks


def verify_one(key, policy="min"):
    """All applicable checks for one instance reference; never raises."""
    try:
        inst = resolve_instance(key)
        if inst.kind == "lrb":
            checks = _band_checks(inst, policy)
        else:
            checks = _lattice_checks(inst, policy)
        return {"instance": inst.key, "checks": checks,
                "all_pass": all(v is True for v in checks.values())}
    except Exception as e:                      # noqa: BLE001
        return {"instance": key,
                "error": "%s: %s" % (type(e).__name__, e),
                "all_pass": False}


def cmd_verify_all(args):
    keys = [args.instance] if args.instance else list(VERIFY_CORPUS)
    if args.parallel > 1 and len(keys) > 1:
        with futures.ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(verify_one, keys,
                                    [args.seed_policy] * len(keys)))
    else:
        results = [verify_one(k, args.seed_policy) for k in keys]
    results.sort(key=lambda r: r["instance"])
    ok = all(r["all_pass"] for r in results)
    failures = [r["instance"] for r in results if not r["all_pass"]]
    report = {"instances": results, "failures": failures, "all_pass": ok}
    return report, ok


# ---------------------------------------------------------------------------
# rendering

def _flat(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    return str(v)


def _is_block(v):
    if isinstance(v, dict):
        return bool(v)
    if isinstance(v, list):
        return bool(v) and any(isinstance(x, (dict, list)) and
                               not _all_scalar(x) for x in v)
    return False


def _all_scalar(v):
    return isinstance(v, list) and all(
        not isinstance(x, (dict, list)) for x in v)


def _text_lines(obj, indent, out):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_block(v):
                out.append("%s%s:" % (indent, k))
                _text_lines(v, indent + "  ", out)
            else:
                out.append("%s%s: %s" % (indent, k, _flat(v)))
    elif isinstance(obj, list):
        for item in obj:
            if _is_block(item):
                out.append("%s-" % indent)
                _text_lines(item, indent + "  ", out)
            else:
                out.append("%s- %s" % (indent, _flat(item)))
    else:
        out.append("%s%s" % (indent, _flat(obj)))


def emit(report, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True,
                                separators=(",", ":")) + "\n")
    else:
        lines = []
        _text_lines(report, "", lines)
        stream.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# argument plumbing

COMMANDS = {
    "info": cmd_info,
    "idempotents": cmd_idempotents,
    "cartan": cmd_cartan,
    "peirce": cmd_peirce,
    "theorem-a": cmd_theorem_a,
    "theorem-c": cmd_theorem_c,
    "theorem-d": cmd_theorem_d,
    "theorem-e": cmd_theorem_e,
    "derangement": cmd_derangement,
    "rtt": cmd_rtt,
}

HELP = {
    "info": "sizes, orbit counts, class flags, semisimplicity",
    "idempotents": "idempotent family per support orbit, with its checks",
    "cartan": "Cartan invariants over support orbits",
    "peirce": "corner dimensions and characters per comparable pair orbit",
    "theorem-a": "split semisimplicity vs orbit count equivalence",
    "theorem-c": "corner == homology tensor identity",
    "theorem-d": "corner == chain sum identity and radical layers",
    "theorem-e": "flag and derangement module decompositions",
    "derangement": "derangement numbers and character",
    "rtt": "random-to-top spectrum with exact certificates",
    "verify-all": "every applicable check on one instance or the corpus",
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="lrbkit",
        description="exact representation theory of finite left regular "
                    "bands under group symmetry")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")
    for name in list(COMMANDS) + ["verify-all"]:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("--instance", required=(name != "verify-all"),
                       help="builtin:<family>?<params> or a JSON file path")
        p.add_argument("--field", default="q",
                       help="q for the rationals, fp:<p> for a prime field")
        p.add_argument("--format", dest="fmt", default="text",
                       choices=["json", "text"])
        p.add_argument("--seed-policy", dest="seed_policy", default="min",
                       choices=["min", "max"],
                       help="which fiber element seeds each idempotent")
        if name == "verify-all":
            p.add_argument("--parallel", type=int, default=1,
                           help="worker processes for independent instances")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-all":
            report, ok = cmd_verify_all(args)
        else:
            inst = resolve_instance(args.instance)
            sess = Session(inst, parse_field(args.field), args.seed_policy)
            report, ok = COMMANDS[args.command](sess, args)
    except AssertionError as e:
        emit({"error": "check failed: %s" % e, "all_pass": False}, args.fmt)
        return 1
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        emit({"error": str(e)}, args.fmt, stream=sys.stderr)
        return 2
    emit(report, args.fmt)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
