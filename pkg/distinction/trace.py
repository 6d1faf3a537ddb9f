"""
Proof Traces
Trees of rule applications that justify a distinction verdict
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional

TRACE_VERSION = 1


class Rule(str, Enum):
    """Frozen rule tokens; downstream tooling asserts on these values"""
    THM_UNITDIST = "THM-UNITDIST"
    PROP_DISCRDIST = "PROP-DISCRDIST"
    COR_SPEHDIST = "COR-SPEHDIST"
    COR_ALTERNATION = "COR-ALTERNATION"
    THM_DISTGEN = "THM-DISTGEN"
    LEM_DERNIER = "LEM-DERNIER"
    DEF_SIGMA_INDUCED = "DEF-SIGMA-INDUCED"
    PROP_SELFDUAL_NECESSARY = "PROP-SELFDUAL-NECESSARY"


@dataclass
class ProofTrace:
    """One rule application: its verdict, what it judged, and the sub-judgements it used."""
    rule: Rule
    verdict: bool
    subject: str
    children: List["ProofTrace"] = field(default_factory=list)
    detail: Optional[str] = None

    def walk(self) -> Iterator["ProofTrace"]:
        """Pre-order traversal."""
        yield self
        for child in self.children:
            yield from child.walk()

    def rules(self) -> List[Rule]:
        return [node.rule for node in self.walk()]

    def to_dict(self, root: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        if root:
            data["traceVersion"] = TRACE_VERSION
        data.update({
            "rule": self.rule.value,
            "verdict": self.verdict,
            "subject": self.subject,
            "detail": self.detail,
            "children": [child.to_dict(root=False) for child in self.children],
        })
        return data

    def label(self) -> str:
        mark = "yes" if self.verdict else "no"
        text = f"{self.rule.value} [{mark}] {self.subject}"
        if self.detail:
            text += f"  -- {self.detail}"
        return text

    def render(self, indent: str = "  ") -> str:
        lines: List[str] = []

        def visit(node: "ProofTrace", depth: int) -> None:
            lines.append(f"{indent * depth}{node.label()}")
            for child in node.children:
                visit(child, depth + 1)

        visit(self, 0)
        return "\n".join(lines)


def conjunction(rule: Rule, subject: str, children: List[ProofTrace], detail: Optional[str] = None) -> ProofTrace:
    """Node whose verdict is the AND of its children (vacuously true)."""
    return ProofTrace(
        rule=rule,
        verdict=all(child.verdict for child in children),
        subject=subject,
        children=children,
        detail=detail,
    )
