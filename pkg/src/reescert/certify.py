"""Certificates: checked premises plus cited classical consequences.

The expensive verified facts are the closure check and the shape of the
marked basis (quadratic, squarefree leads).  The ring-theoretic
conclusions are not recomputed homologically; they follow from those
premises by standard results, which the certificate cites by name:
a defining ideal with a quadratic Groebner basis gives a Koszul algebra
(Froberg), a toric ideal with a squarefree initial ideal gives a normal
semigroup ring (Sturmfels), and normal affine semigroup rings are
Cohen-Macaulay (Hochster).
"""

from __future__ import annotations

from .family import LeveledFamily, characterize, is_closed_under_comparability
from .presentation import basis_to_json, build_basis

CITATIONS = {
    "koszul": (
        "the defining ideal has a quadratic Groebner basis; algebras with a"
        " G-quadratic presentation are Koszul (Froberg's theorem)"),
    "normal_domain": (
        "the initial ideal of the toric defining ideal is squarefree, so"
        " the semigroup is normal (Sturmfels' criterion); affine semigroup"
        " rings are domains"),
    "cohen_macaulay": (
        "normal affine semigroup rings are Cohen-Macaulay (Hochster's"
        " theorem)"),
}

SUBJECTS = {
    "rees": "multi-Rees algebra of the family",
    "fiber": "special fiber semigroup ring of the family",
}


def build_certificate(fam: LeveledFamily) -> dict:
    """Certificate dict; JSON-ready.  Conclusions only when closed."""
    report = is_closed_under_comparability(fam)
    ch = characterize(fam)
    out = {
        "mode": fam.mode,
        "subject": SUBJECTS[fam.mode],
        "variables": fam.n,
        "levels": [
            {"index": lv.index, "degree": lv.degree, "size": len(lv)}
            for lv in fam.levels
        ],
        "closed_under_comparability": report.closed,
        "pairs_checked": report.pairs_checked,
        "characterization": {
            "level_indices": list(ch.level_indices),
            "borel_equal": list(ch.borel_equal),
            "borel_subset": list(ch.borel_subset),
            "chain": list(ch.chain),
            "conjunction": ch.conjunction,
        },
    }
    if fam.mode == "fiber":
        out["embedding_degree"] = fam.embedding_degree
    if not report.closed:
        out["witnesses"] = [
            {"pair": [list(w.pair[0]), list(w.pair[1])],
             "images": [img.text() for img in w.images],
             "missing": list(w.missing)}
            for w in report.witnesses
        ]
        out["conclusions"] = []
        out["citations"] = {}
        return out

    basis = build_basis(fam)
    shape = basis_to_json(basis)
    out["basis_size"] = shape["count"]
    out["quadratic"] = shape["quadratic"]
    out["squarefree_leads"] = shape["squarefree_leads"]
    if shape["quadratic"] and shape["squarefree_leads"]:
        out["conclusions"] = ["koszul", "normal_domain", "cohen_macaulay"]
        out["citations"] = dict(CITATIONS)
    else:
        out["conclusions"] = []
        out["citations"] = {}
    return out


def certificate_text(cert: dict) -> str:
    lines = []
    sizes = "/".join(str(lv["size"]) for lv in cert["levels"])
    lines.append(f"mode: {cert['mode']}  variables: {cert['variables']}"
                 f"  level sizes: {sizes}")
    if cert["mode"] == "fiber":
        lines.append(f"embedding degree: {cert['embedding_degree']}")
    closed = cert["closed_under_comparability"]
    lines.append(f"closed under comparability: {'yes' if closed else 'no'}"
                 f"  ({cert['pairs_checked']} pairs checked)")
    ch = cert["characterization"]
    if ch["level_indices"]:
        borel = " ".join(
            f"{i}:{'yes' if ok else 'no'}"
            for i, ok in zip(ch["level_indices"], ch["borel_equal"]))
        lines.append(f"borel equality by level: {borel}")
        if ch["chain"]:
            chain = " ".join(
                f"{i}-{j}:{'yes' if ok else 'no'}"
                for i, j, ok in zip(ch["level_indices"],
                                    ch["level_indices"][1:], ch["chain"]))
            lines.append(f"support chain: {chain}")
        lines.append(
            f"structural conjunction: {'yes' if ch['conjunction'] else 'no'}")
    if not closed:
        lines.append("verdict: no certificate; family is not closed")
        for w in cert["witnesses"][:8]:
            a, b = w["pair"]
            lines.append(
                f"  witness T[{a[0]},{a[1]}]*T[{b[0]},{b[1]}] rewrites to"
                f" ({w['images'][0]}, {w['images'][1]}), missing component"
                f" {w['missing']}")
        more = len(cert["witnesses"]) - 8
        if more > 0:
            lines.append(f"  ... and {more} more witness(es)")
        return "\n".join(lines)
    lines.append(
        f"marked basis: {cert['basis_size']} binomials, quadratic:"
        f" {'yes' if cert['quadratic'] else 'no'}, squarefree leads:"
        f" {'yes' if cert['squarefree_leads'] else 'no'}")
    lines.append(f"certified for the {cert['subject']}:")
    for key in cert["conclusions"]:
        lines.append(f"  {key}: {cert['citations'][key]}")
    return "\n".join(lines)
