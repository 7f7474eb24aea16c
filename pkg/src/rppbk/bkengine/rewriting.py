"""A small abstract rewriting toolkit.

A rewriting instance supplies one-step successors, labelled by a move, and
an integer potential that every step must strictly lower.  The potential
certifies termination.  Together with local confluence (every pair of
one-step successors joins), it forces a unique normal form for every state.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Hashable, Protocol, TypeVar

from ..errors import TerminationError

S = TypeVar("S")
Move = Hashable


class RewritingSystem(Protocol[S]):
    def moves(self, state: S) -> list: ...

    def step(self, state: S, move) -> S: ...

    def potential(self, state: S) -> int: ...


def pick_min(moves, rng=None):
    return min(moves)


def pick_max(moves, rng=None):
    return max(moves)


def pick_random(moves, rng):
    return rng.choice(sorted(moves))


STRATEGIES: dict[str, Callable] = {"min": pick_min, "max": pick_max, "random": pick_random}


def normal_form(system: RewritingSystem, state, strategy: str = "min", seed=None, trace: list | None = None):
    """Rewrite until no move applies, checking the potential drops at each step.

    ``trace``, if given, receives ``(move, state_after)`` for every step.
    """
    choose = STRATEGIES[strategy]
    rng = random.Random(seed) if strategy == "random" else None
    level = system.potential(state)
    while True:
        moves = system.moves(state)
        if not moves:
            return state
        move = choose(moves, rng)
        state = system.step(state, move)
        new_level = system.potential(state)
        if new_level >= level:
            raise TerminationError(f"potential did not drop ({level} -> {new_level}) at move {move}")
        level = new_level
        if trace is not None:
            trace.append((move, state))


def local_confluence_failures(system: RewritingSystem, state, normalize=None) -> list:
    """Pairs of moves whose one-step results reach different normal forms."""
    norm = normalize or (lambda s: normal_form(system, s))
    successors = {m: norm(system.step(state, m)) for m in system.moves(state)}
    return [(a, b) for a, b in combinations(sorted(successors), 2) if successors[a] != successors[b]]


def all_normal_forms(system: RewritingSystem, state) -> set:
    """Every descent-free state reachable by any sequence of moves (exhaustive search)."""
    seen, stack, finals = {state}, [state], set()
    while stack:
        s = stack.pop()
        moves = system.moves(s)
        if not moves:
            finals.add(s)
        for m in moves:
            nxt = system.step(s, m)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return finals
