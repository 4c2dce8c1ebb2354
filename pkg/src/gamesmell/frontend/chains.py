"""Message-chain extraction.

A chain is a maximal run of member accesses and calls hanging off one root
expression: a.b.c().d has length 4 (three member links plus one call link).
Maximality means the node's parent does not extend it, so an argument's chain
is separate from the chain of the call it sits in.
"""

from __future__ import annotations

from dataclasses import dataclass

from gamesmell.frontend.jsast import AstNode, NodeKind as K, Span, walk

_LINK_KINDS = frozenset({K.MEMBER, K.CALL, K.NEW, K.TAGGED_TEMPLATE})


@dataclass(frozen=True)
class Chain:
    node: AstNode
    span: Span
    length: int


def chain_length(node: AstNode) -> int:
    length = 0
    while node.kind in _LINK_KINDS:
        length += 1
        node = node.children[0]
    return length


def _continues_chain(parent: AstNode, node: AstNode) -> bool:
    return parent.kind in _LINK_KINDS and parent.children[0] is node


def extract_chains(root: AstNode) -> list[Chain]:
    chains: list[Chain] = []
    for node, ancestors in walk(root):
        if node.kind not in _LINK_KINDS:
            continue
        if ancestors and _continues_chain(ancestors[-1], node):
            continue
        chains.append(Chain(node, node.span, chain_length(node)))
    chains.sort(key=lambda c: c.span.sort_key())
    return chains
