"""Command-line driver: table emission, trace queries, Yang-Baxter sweeps,
and golden-table verification suites."""

import argparse
import importlib.resources
import itertools
import json
import multiprocessing
import os
import random
import sys
import time

from ncmac.perms import partitions, permutations, identity, apply_s
from ncmac.rings import LaurentPoly
from ncmac.symfunc import SymFunc

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2

SUITES = ("annex", "hw", "trace-triangle", "lee", "yb", "wheel", "hooks",
          "positivity")


class ConfigError(ValueError):
    pass


# ---- formatting ----

def _grlex_key(exps):
    return (-sum(exps),) + tuple(-e for e in exps)


def _latex_var(name):
    if len(name) == 1:
        return name
    return "%s_{%s}" % (name[0], name[1:])


def latex_poly(poly):
    """A Laurent polynomial as LaTeX, monomials in graded-lex order."""
    if not isinstance(poly, LaurentPoly):
        return str(poly)
    if poly.is_zero():
        return "0"
    parts = []
    for exps in sorted(poly.terms, key=_grlex_key):
        c = poly.terms[exps]
        factors = []
        for name, e in zip(poly.vars, exps):
            if e == 0:
                continue
            v = _latex_var(name)
            factors.append(v if e == 1 else "%s^{%d}" % (v, e))
        if not factors:
            mono = str(c)
        elif c == 1:
            mono = " ".join(factors)
        else:
            mono = "%s %s" % (c, " ".join(factors))
        parts.append(mono)
    return " + ".join(parts)


def latex_sym(f, letter="s"):
    """A symmetric function in the given basis as an Annex-style line:
    partitions in decreasing lexicographic order, coefficients
    parenthesized when they have several terms."""
    f = f.to_basis(letter)
    if f.is_zero():
        return "0"
    parts = []
    for lam in sorted(f.coeffs, reverse=True):
        c = f.coeffs[lam]
        body = latex_poly(c)
        if isinstance(c, LaurentPoly) and len(c.terms) > 1:
            body = "( %s )" % body
        term = "%s_{%s}" % (letter, "".join(str(p) for p in lam))
        if body != "1":
            term = "%s %s" % (body, term)
        parts.append(term)
    return "+".join(parts)


def sym_to_jsonable(f):
    out = {"basis": f.basis, "coeffs": {}}
    for lam, c in sorted(f.coeffs.items()):
        key = ",".join(str(p) for p in lam)
        if isinstance(c, LaurentPoly):
            out["coeffs"][key] = c.to_dict()
        else:
            out["coeffs"][key] = c
    return out


def texpr_to_jsonable(texpr):
    return {",".join(str(p) for p in lam): (c.to_dict()
                                            if isinstance(c, LaurentPoly)
                                            else c)
            for lam, c in sorted(texpr.items())}


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _parse_mu(s):
    if not s:
        raise ConfigError("empty partition")
    try:
        mu = tuple(int(p) for p in s.replace(" ", "").split(","))
    except ValueError:
        raise ConfigError("cannot parse partition %r" % s)
    if not mu or any(p <= 0 for p in mu) or list(mu) != sorted(mu,
                                                              reverse=True):
        raise ConfigError("%r is not a partition" % s)
    return mu


def _parse_perm(s):
    s = s.replace(" ", "")
    if "," in s:
        w = tuple(int(p) for p in s.split(","))
    else:
        w = tuple(int(ch) for ch in s)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ConfigError("%r is not a permutation" % s)
    return w


# ---- report plumbing ----

class Report:
    def __init__(self, suite):
        self.suite = suite
        self.cases = []

    def add(self, ident, status, seconds, witness=None):
        case = {"id": ident, "status": status,
                "seconds": round(seconds, 3)}
        if witness is not None:
            case["witness"] = witness
        self.cases.append(case)

    def case(self, ident, fn, gating=True, expected_absent=False):
        t0 = time.time()
        ok = fn()
        dt = time.time() - t0
        if expected_absent:
            status = "expected-absent" if not ok else "unexpected-match"
        elif ok:
            status = "pass"
        elif gating:
            status = "fail"
        else:
            status = "open"
        self.add(ident, status, dt)
        return status

    @property
    def failed(self):
        return any(c["status"] == "fail" for c in self.cases)

    def to_jsonable(self):
        return {"suite": self.suite, "cases": self.cases,
                "failed": self.failed}

    def render(self):
        lines = ["suite %s" % self.suite]
        for c in self.cases:
            lines.append("  %-40s %-16s %7.3fs" % (c["id"], c["status"],
                                                   c["seconds"]))
        lines.append("suite %s: %s (%d cases)"
                     % (self.suite, "FAIL" if self.failed else "ok",
                        len(self.cases)))
        return "\n".join(lines)


def load_annex_tables():
    data = (importlib.resources.files("ncmac")
            .joinpath("data/annex_tables.json").read_text())
    raw = json.loads(data)
    out = {}
    for key, entry in raw.items():
        out[key] = {tuple(int(p) for p in lam.split(",")):
                    LaurentPoly.from_dict(d) for lam, d in entry.items()}
    return out


def _key_mu(key):
    return tuple(int(p) for p in key.split(":")[-1].split(","))


# ---- suites ----

def suite_annex(max_n, jobs=1, seed=None):
    from ncmac.macdonald import tildeH_sym
    rep = Report("annex")
    for key, want in sorted(load_annex_tables().items()):
        mu = _key_mu(key)
        if sum(mu) > max_n:
            continue
        rep.case(key, lambda mu=mu, want=want:
                 dict(tildeH_sym(mu, multi_t=True).to_basis("s").coeffs)
                 == want)
    return rep


def suite_hw(max_n, jobs=1, seed=None):
    from ncmac.macdonald import ncH_direct, hw_assemble
    rep = Report("hw")
    for n in range(1, max_n + 1):
        for mu in partitions(n):
            for multi_t in (False, True):
                ident = "%s/%s" % (",".join(map(str, mu)),
                                   "multi-t" if multi_t else "single-t")
                rep.case(ident, lambda mu=mu, multi_t=multi_t:
                         ncH_direct(mu, multi_t)
                         == hw_assemble(mu, "H", multi_t))
    return rep


def codominant_permutations(n):
    from ncmac.hecke import is_codominant
    return [w for w in permutations(n) if is_codominant(w)]


def suite_trace_triangle(max_n, jobs=1, seed=None):
    from ncmac.hecke import (lascoux_element, trace_sym, dyck_graph_of,
                             abreu_nigro_theta, theta_to_sym)
    from ncmac.chromatic import omega_X_sym
    rep = Report("trace-triangle")
    for n in range(2, max_n + 1):
        for w in codominant_permutations(n):
            def check(w=w):
                tr = trace_sym(lascoux_element(w)).to_basis("s")
                chrom = omega_X_sym(dyck_graph_of(w), var="q").to_basis("s")
                an = theta_to_sym(abreu_nigro_theta(w)).to_basis("s")
                return tr == chrom == an
            rep.case("".join(map(str, w)), check)
    return rep


def suite_lee(max_n, jobs=1, seed=None):
    from ncmac.hecke import (admissible_edges, relation_triple,
                             interval_sum, trace_sym, HeckeElem)
    from ncmac.rings import RatFunc
    rep = Report("lee")
    q = LaurentPoly.gen(("q",), "q")
    for n in range(3, max_n + 1):
        for sigma in codominant_permutations(n):
            for edge in admissible_edges(sigma):
                def check(sigma=sigma, edge=edge, n=n):
                    s0, s1, s2 = relation_triple(sigma, edge)
                    c0, c1, c2 = (interval_sum(w) for w in (s0, s1, s2))
                    j = edge[1]
                    lhs = interval_sum(apply_s(identity(n), j - 1)) * c1
                    if lhs != c0 + c2.scale(q):
                        return False
                    t0, t1, t2 = (trace_sym(c) for c in (c0, c1, c2))
                    return t1.scale(q + 1) == t0 + t2.scale(q)
                rep.case("%s@%d,%d" % ("".join(map(str, sigma)), *edge),
                         check)
    # the modular-law sextuple
    if max_n >= 6:
        def sextuple():
            w1, w0, w2 = (3, 4, 2, 6, 5, 1), (3, 2, 4, 6, 5, 1), \
                         (4, 3, 2, 6, 5, 1)
            t1, t0, t2 = (trace_sym(interval_sum(w)) for w in (w1, w0, w2))
            return t1.scale(q + 1) == t2 + t0.scale(q)
        rep.case("modular-law-342651", sextuple)
    return rep


def _yb_case(args):
    mu, multi_t = args
    from ncmac.hecke import yb_macdonald
    from ncmac.macdonald import tildeH_sym
    t0 = time.time()
    try:
        got = yb_macdonald(mu, multi_t=multi_t)
    except ValueError:
        return (mu, multi_t, "unsupported-shape", time.time() - t0)
    want = tildeH_sym(mu, multi_t=multi_t).to_basis("s")
    ok = got.to_basis("s") == want
    return (mu, multi_t, "pass" if ok else "fail", time.time() - t0)


def suite_yb(max_n, jobs=1, seed=None):
    rep = Report("yb")
    work = []
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            work.append((mu, False))
            work.append((mu, True))
    results = _parallel_map(_yb_case, work, jobs)
    for mu, multi_t, status, dt in results:
        ident = "%s/%s" % (",".join(map(str, mu)),
                           "multi-t" if multi_t else "single-t")
        if mu == (2, 2, 2, 1) and multi_t:
            status = "expected-absent"
        rep.add(ident, status, dt)
    return rep


def suite_wheel(max_n, jobs=1, seed=None):
    from ncmac.macdonald import tildeH_sym, check_wheel
    rep = Report("wheel")
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            def check(mu=mu):
                schur = tildeH_sym(mu, multi_t=True).to_basis("s")
                return check_wheel(mu, schur, multi_t=True)
            rep.case(",".join(map(str, mu)), check, gating=False)
    return rep


def suite_hooks(max_n, jobs=1, seed=None):
    from ncmac.macdonald import tildeH_sym, check_hooks
    rep = Report("hooks")
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            def check(mu=mu):
                schur = tildeH_sym(mu, multi_t=True).to_basis("s")
                return check_hooks(mu, schur, multi_t=True)
            rep.case(",".join(map(str, mu)), check, gating=False)
    return rep


def suite_positivity(max_n, jobs=1, seed=None):
    from ncmac.macdonald import tildeH_sym
    rep = Report("positivity")
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            def check(mu=mu):
                schur = tildeH_sym(mu, multi_t=True).to_basis("s")
                return all(isinstance(c, LaurentPoly)
                           and all(x == int(x) and x > 0
                                   for x in c.terms.values())
                           and all(e >= 0 for exps in c.terms
                                   for e in exps)
                           for c in schur.coeffs.values())
            rep.case(",".join(map(str, mu)), check, gating=False)
    return rep


SUITE_FNS = {
    "annex": (suite_annex, 6),
    "hw": (suite_hw, 5),
    "trace-triangle": (suite_trace_triangle, 6),
    "lee": (suite_lee, 6),
    "yb": (suite_yb, 6),
    "wheel": (suite_wheel, 6),
    "hooks": (suite_hooks, 6),
    "positivity": (suite_positivity, 6),
}


def run_suite(name, max_n=None, jobs=1, seed=None):
    if name not in SUITE_FNS:
        raise ConfigError("unknown suite %r (choose from %s)"
                          % (name, "|".join(SUITES)))
    fn, default_n = SUITE_FNS[name]
    if max_n is None:
        max_n = int(os.environ.get("NCMAC_MAX_N", default_n))
    return fn(max_n, jobs=jobs, seed=seed)


# ---- sweep ----

def _parallel_map(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(fn, items)
    return [fn(x) for x in items]


def _census_one(mu):
    from ncmac.hecke import yb_census
    t0 = time.time()
    found = yb_census(mu)
    return (mu, found, time.time() - t0)


def sweep_yb(n, jobs=1):
    """Scan S_n for permutations whose normalized Yang-Baxter trace with
    spectral parameters v_mu matches the single-t Macdonald polynomial,
    for every partition mu of n."""
    mus = sorted(partitions(n), reverse=True)
    results = _parallel_map(_census_one, mus, jobs)
    report = {"n": n, "jobs": jobs, "mus": []}
    for mu, found, dt in results:
        report["mus"].append({
            "mu": ",".join(map(str, mu)),
            "count": len(found),
            "matches": ["".join(map(str, w)) if n < 10 else
                        ",".join(map(str, w)) for w in found],
            "seconds": round(dt, 3),
        })
    return report


# ---- subcommands ----

def cmd_macdonald(args):
    from ncmac.macdonald import (hw_assemble, tildeH_sym, H_sym,
                                 phi_to_schur)
    mu = _parse_mu(args.mu)
    variant = args.variant
    if args.phi:
        phi = hw_assemble(mu, variant=variant, multi_t=args.multi_t)
        if args.format == "json":
            payload = {"".join(map(str, u)): c.to_dict()
                       for u, c in sorted(phi.items())}
            _emit(json.dumps({"mu": args.mu, "variant": variant,
                              "phi": payload}, indent=1), args.out)
        else:
            terms = ["%s Phi_%s" % (latex_poly(c), "".join(map(str, u)))
                     for u, c in sorted(phi.items())]
            _emit(" + ".join(terms), args.out)
        return EXIT_PASS
    if variant == "tilde":
        f = tildeH_sym(mu, multi_t=args.multi_t)
    else:
        f = H_sym(mu, multi_t=args.multi_t)
    f = f.to_basis(args.basis)
    if args.format == "json":
        _emit(json.dumps({"mu": args.mu, "variant": variant,
                          "f": sym_to_jsonable(f)}, indent=1), args.out)
    elif args.format == "latex":
        _emit(latex_sym(f, args.basis), args.out)
    else:
        _emit(str(f), args.out)
    return EXIT_PASS


def cmd_trace(args):
    from ncmac.hecke import (HeckeElem, interval_sum, trace_elem,
                             theta_to_sym)
    w = _parse_perm(args.perm)
    if args.interval:
        elem = interval_sum(w)
    else:
        elem = HeckeElem(len(w), {w: 1})
    texpr = trace_elem(elem)
    f = theta_to_sym(texpr).to_basis("s")
    if args.format == "json":
        _emit(json.dumps({"perm": args.perm,
                          "interval": bool(args.interval),
                          "theta": texpr_to_jsonable(texpr),
                          "schur": sym_to_jsonable(f)}, indent=1),
              args.out)
    elif args.format == "latex":
        _emit(latex_sym(f, "s"), args.out)
    else:
        def wrap(c):
            s = str(c)
            return "(%s)" % s if ("+" in s or "-" in s[1:]) else s
        theta = " + ".join("%s Theta_%s" % (wrap(c), "".join(map(str, lam)))
                           for lam, c in sorted(texpr.items()))
        _emit("trace = %s\n      = %s" % (theta, f), args.out)
    return EXIT_PASS


def cmd_yb(args):
    if args.sweep:
        if args.n is None:
            raise ConfigError("--sweep needs --n")
        limit = int(os.environ.get("NCMAC_MAX_N", 7))
        if args.n > limit and not args.allow_large:
            raise ConfigError("n=%d exceeds the gate (%d); pass "
                              "--allow-large to override" % (args.n, limit))
        report = sweep_yb(args.n, jobs=args.jobs)
        text = json.dumps(report, indent=1)
        _emit(text, args.out)
        return EXIT_PASS
    if not args.mu:
        raise ConfigError("need --mu or --sweep")
    from ncmac.hecke import yb_macdonald
    mu = _parse_mu(args.mu)
    try:
        f = yb_macdonald(mu, multi_t=args.multi_t)
    except ValueError as exc:
        raise ConfigError(str(exc))
    if args.format == "json":
        _emit(json.dumps({"mu": args.mu, "f": sym_to_jsonable(f)},
                         indent=1), args.out)
    else:
        _emit(latex_sym(f, "s") if args.format == "latex" else str(f),
              args.out)
    return EXIT_PASS


def cmd_table(args):
    from ncmac.macdonald import tildeH_sym
    mu = _parse_mu(args.mu)
    f = tildeH_sym(mu, multi_t=True).to_basis("s")
    name = "".join(map(str, mu))
    if args.format == "json":
        _emit(json.dumps({"mu": args.mu, "f": sym_to_jsonable(f)},
                         indent=1), args.out)
    elif args.format == "text":
        _emit(str(f), args.out)
    else:
        _emit("\\widetilde{H}_{%s}=\n%s" % (name, latex_sym(f, "s")),
              args.out)
    return EXIT_PASS


def cmd_verify(args):
    if args.seed is not None:
        random.seed(args.seed)
    rep = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs,
                    seed=args.seed)
    if args.format == "json" or args.out:
        text = json.dumps(rep.to_jsonable(), indent=1)
        _emit(text, args.out)
        if args.out:
            print(rep.render())
    else:
        print(rep.render())
    return EXIT_FAIL if rep.failed else EXIT_PASS


def build_parser():
    p = argparse.ArgumentParser(
        prog="ncmac",
        description="Exact computations with noncommutative Macdonald "
                    "polynomials, Hecke algebra traces and Yang-Baxter "
                    "elements.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "latex", "text"),
                        default="text")
        sp.add_argument("--out", default=None)

    mac = sub.add_parser("macdonald", help="Macdonald polynomial expansions")
    mac.add_argument("--mu", required=True)
    mac.add_argument("--multi-t", action="store_true")
    mac.add_argument("--variant", choices=("H", "tilde"), default="tilde")
    mac.add_argument("--phi", action="store_true",
                     help="emit the noncommutative Phi-expansion")
    mac.add_argument("--basis", choices=("s", "m", "h", "e", "p"),
                     default="s")
    common(mac)
    mac.set_defaults(fn=cmd_macdonald)

    tr = sub.add_parser("trace", help="Hecke algebra traces")
    tr.add_argument("--perm", required=True)
    tr.add_argument("--interval", action="store_true",
                    help="trace of the Bruhat interval sum c_w instead "
                         "of the single basis element T_w")
    common(tr)
    tr.set_defaults(fn=cmd_trace)

    yb = sub.add_parser("yb", help="Yang-Baxter traces and sweeps")
    yb.add_argument("--mu")
    yb.add_argument("--multi-t", action="store_true")
    yb.add_argument("--single-t", action="store_true")
    yb.add_argument("--sweep", action="store_true")
    yb.add_argument("--n", type=int)
    yb.add_argument("--jobs", type=int, default=1)
    yb.add_argument("--allow-large", action="store_true")
    common(yb)
    yb.set_defaults(fn=cmd_yb)

    tab = sub.add_parser("table", help="emit a multi-t Macdonald table")
    tab.add_argument("--mu", required=True)
    common(tab)
    tab.set_defaults(fn=cmd_table)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True)
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--seed", type=int, default=None)
    common(ver)
    ver.set_defaults(fn=cmd_verify)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
