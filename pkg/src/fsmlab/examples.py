"""Bundled example machines.

EQABC decides the language of words over {a, b, c} (laid out as
``@ _ <symbols>`` with the head starting on the blank) containing equally
many a's, b's, and c's: it copies each letter kind to its own auxiliary
tape, then pops one of each in lockstep until all three run out together.

EQABC-ND decides the same language nondeterministically: each scanned
letter is copied to an arbitrary auxiliary tape (and an initial guess may
skip the copy phase entirely), so only some computations sort the letters
correctly; the machine accepts when at least one does.  Its words start at
cell 0 of a tape with no left-end marker.
"""

from __future__ import annotations

from functools import lru_cache

from .machine import MachineDef, parse_machine


def _rule(frm: str, read: str, to: str, actions: str) -> dict:
    return {"from": frm, "read": read.split(), "to": to, "actions": actions.split()}


EQABC_OBJ: dict = {
    "name": "EQABC",
    "tapes": 4,
    "states": ["S", "Y", "C", "D", "E", "F", "G"],
    "alphabet": ["a", "b", "c"],
    "start": "S",
    "finals": ["Y"],
    "accept": "Y",
    "rules": [
        _rule("S", "_ _ _ _", "C", "R R R R"),
        _rule("C", "a _ _ _", "D", "a a _ _"),
        _rule("D", "a a _ _", "C", "R R _ _"),
        _rule("C", "b _ _ _", "E", "b _ b _"),
        _rule("E", "b _ b _", "C", "R _ R _"),
        _rule("C", "c _ _ _", "F", "c _ _ c"),
        _rule("F", "c _ _ c", "C", "R _ _ R"),
        _rule("C", "_ _ _ _", "G", "_ L L L"),
        _rule("G", "_ _ _ _", "Y", "_ _ _ _"),
        _rule("G", "_ a b c", "G", "_ L L L"),
    ],
}


def _copy_rules(sym: str) -> list[dict]:
    out = []
    for tape in (1, 2, 3):
        write = ["_"] * 4
        write[0] = sym
        write[tape] = sym
        move = ["_"] * 4
        move[0] = "R"
        move[tape] = "R"
        read_d = ["_"] * 4
        read_d[0] = sym
        read_d[tape] = sym
        out.append(_rule("C", f"{sym} _ _ _", "D", " ".join(write)))
        out.append(_rule("D", " ".join(read_d), "C", " ".join(move)))
    return out


EQABC_ND_OBJ: dict = {
    "name": "EQABC-ND",
    "tapes": 4,
    "states": ["S", "Y", "C", "D", "G"],
    "alphabet": ["a", "b", "c"],
    "start": "S",
    "finals": ["Y"],
    "accept": "Y",
    "rules": [
        _rule("S", "_ _ _ _", "C", "R R R R"),
        _rule("S", "_ _ _ _", "G", "R R R R"),
        *_copy_rules("a"),
        *_copy_rules("b"),
        *_copy_rules("c"),
        _rule("C", "_ _ _ _", "G", "_ L L L"),
        _rule("G", "_ _ _ _", "Y", "_ _ _ _"),
        _rule("G", "_ a b c", "G", "_ L L L"),
        _rule("G", "_ a c b", "G", "_ L L L"),
        _rule("G", "_ b a c", "G", "_ L L L"),
        _rule("G", "_ b c a", "G", "_ L L L"),
        _rule("G", "_ c a b", "G", "_ L L L"),
        _rule("G", "_ c b a", "G", "_ L L L"),
    ],
}

BUNDLED: tuple[dict, ...] = (EQABC_OBJ, EQABC_ND_OBJ)


@lru_cache(maxsize=None)
def eqabc() -> MachineDef:
    return parse_machine(EQABC_OBJ)


@lru_cache(maxsize=None)
def eqabc_nd() -> MachineDef:
    return parse_machine(EQABC_ND_OBJ)
