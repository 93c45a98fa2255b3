"""Derivation trees shared by the PSF prover and the m-G3ip oracle."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from . import prop, psf

AnySequent = Union[psf.Sequent, prop.PropSequent]


@dataclass(frozen=True, eq=False)
class Derivation:
    """One rule application.

    ``principal`` holds the principal formula occurrence(s); ``var`` the
    eigenvariable or the instantiating variable of a quantifier rule.
    """

    rule: str
    conclusion: AnySequent
    principal: tuple = ()
    premises: tuple["Derivation", ...] = ()
    var: Optional[str] = None

    def nodes(self) -> Iterator["Derivation"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.premises))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)

    def rules_used(self) -> list[str]:
        return [n.rule for n in self.nodes()]

    def principal_text(self) -> str:
        text = ", ".join(str(f) for f in self.principal)
        if self.var is not None:
            text = f"{text} @ {self.var}" if text else f"@ {self.var}"
        return text

    def to_dict(self) -> dict:
        return {
            "rule": str(self.rule),
            "conclusion": str(self.conclusion),
            "principal": self.principal_text(),
            "premises": [p.to_dict() for p in self.premises],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def render_text(d: Derivation) -> str:
    """Indented tree, root first."""
    lines: list[str] = []
    stack = [(d, 0)]
    while stack:
        node, depth = stack.pop()
        extra = f"   [{node.principal_text()}]" if node.principal or node.var else ""
        lines.append(f"{'  ' * depth}{node.rule}: {node.conclusion}{extra}")
        stack.extend((p, depth + 1) for p in reversed(node.premises))
    return "\n".join(lines)


_LATEX_INF = {0: "\\AxiomC{{}}\n\\RightLabel{{{}}}\\UnaryInfC{{{}}}",
              1: "\\RightLabel{{{}}}\\UnaryInfC{{{}}}",
              2: "\\RightLabel{{{}}}\\BinaryInfC{{{}}}"}


def render_latex(d: Derivation) -> str:
    """bussproofs source (best effort)."""
    out: list[str] = []

    def esc(s: str) -> str:
        return (s.replace("=>", "\\Rightarrow").replace("->", "\\to")
                 .replace("&", "\\land").replace("|", "\\lor")
                 .replace("forall", "\\forall").replace("false", "\\bot"))

    def emit(node: Derivation) -> None:
        for p in node.premises:
            emit(p)
        out.append(_LATEX_INF[len(node.premises)].format(node.rule, f"${esc(str(node.conclusion))}$"))

    emit(d)
    return "\\begin{prooftree}\n" + "\n".join(out) + "\n\\end{prooftree}"
