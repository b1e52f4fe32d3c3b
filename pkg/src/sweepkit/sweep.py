"""The sweep map and its rank-order words.

Sweeping a path means rereading its steps in increasing order of their
start-vertex ranks.  Recording S for a North start and W for an East start
gives the SW word, which doubles as the step word of the image path; the EN
word does the same for step ends.  Knowing both words pins down the rank
sequence of the preimage, which is what bipartite_invert exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EAST,
    NORTH,
    DyckPath,
    Frame,
    RankSequence,
    enumerate_paths,
    parse_path,
    ranks,
)
from .errors import InconsistentPair, NotFuss, SearchExhausted

S_STEP = "S"
W_STEP = "W"

_SW_TO_NE = str.maketrans("SW", "NE")
_NE_TO_SW = str.maketrans("NE", "SW")


def steps_to_sw(steps: str) -> str:
    """Rewrite a step word over {N,E} in the {S,W} alphabet."""
    return steps.translate(_NE_TO_SW)


def sw_to_steps(letters: str) -> str:
    return letters.translate(_SW_TO_NE)


@dataclass(frozen=True)
class SWWord:
    """Length m+n word over {S, W} in rank order; itself a valid path word."""

    frame: Frame
    letters: str

    def __post_init__(self):
        parse_path(self.frame, sw_to_steps(self.letters))

    def as_path(self) -> DyckPath:
        """The path drawn by reading the letters left to right (S up, W right)."""
        return DyckPath(self.frame, sw_to_steps(self.letters))


@dataclass(frozen=True)
class ENWord:
    """Length m+n word over {E, N} in rank order.

    Its reversal, with N -> S and E -> W, is the SW word of the swept rank
    complement, hence must itself be a valid path word.
    """

    frame: Frame
    letters: str

    def __post_init__(self):
        parse_path(self.frame, self.letters[::-1])


def _rank_typed_letters(path: DyckPath, at_start: bool) -> str:
    """Letters in increasing rank order, typed by step starts or step ends."""
    m, n = path.frame.m, path.frame.n
    pairs = []
    r = 0
    for ch in path.steps:
        nxt = r + m if ch == NORTH else r - n
        pairs.append((r if at_start else nxt, ch))
        r = nxt
    pairs.sort()
    return "".join(ch for _, ch in pairs)


def sw_word(path: DyckPath) -> SWWord:
    """S at each rank starting a North step, W at each rank starting an East step."""
    return SWWord(path.frame, steps_to_sw(_rank_typed_letters(path, at_start=True)))


def en_word(path: DyckPath) -> ENWord:
    """N at each rank ending a North step, E at each rank ending an East step."""
    return ENWord(path.frame, _rank_typed_letters(path, at_start=False))


def sweep(path: DyckPath) -> DyckPath:
    """The sweep image: draw the SW word of the path as steps."""
    return DyckPath(path.frame, _rank_typed_letters(path, at_start=True))


def bipartite_invert(sw: SWWord, en: ENWord) -> tuple[DyckPath, RankSequence]:
    """Rebuild the unique common preimage from its SW and EN rank-order words.

    Follow the Eulerian walk S_i -> N_i (rank +m) and W_j -> E_j (rank -n)
    starting from rank 0 at the first position; the visiting order of
    positions spells the preimage's step word and the per-position ranks
    recover its rank sequence.
    """
    if sw.frame != en.frame:
        raise InconsistentPair("SW and EN words live on different frames")
    m, n = sw.frame.m, sw.frame.n
    size = m + n
    s_positions = [i for i, ch in enumerate(sw.letters) if ch == S_STEP]
    w_positions = [i for i, ch in enumerate(sw.letters) if ch == W_STEP]
    n_positions = [i for i, ch in enumerate(en.letters) if ch == "N"]
    e_positions = [i for i, ch in enumerate(en.letters) if ch == "E"]
    if len(s_positions) != len(n_positions):
        raise InconsistentPair("letter counts of the SW and EN words disagree")
    index_within = [0] * size  # position -> its ordinal among its own letter kind
    for arr in (s_positions, w_positions):
        for i, p in enumerate(arr):
            index_within[p] = i

    rank_at = [0] * size
    visited = [False] * size
    order = []
    pos = 0
    r = 0
    for _ in range(size):
        if visited[pos]:
            raise InconsistentPair(f"walk revisits position {pos + 1} before closing")
        visited[pos] = True
        order.append(pos)
        rank_at[pos] = r
        if sw.letters[pos] == S_STEP:
            pos = n_positions[index_within[pos]]
            r += m
        else:
            pos = e_positions[index_within[pos]]
            r -= n
    if pos != 0:
        raise InconsistentPair("walk does not close at the starting position")
    if any(rank_at[i] >= rank_at[i + 1] for i in range(size - 1)):
        raise InconsistentPair("recovered ranks are not increasing along the words")
    word = "".join(NORTH if sw.letters[p] == S_STEP else EAST for p in order)
    return DyckPath(sw.frame, word), RankSequence(tuple(rank_at))


def brute_invert_sweep(path: DyckPath) -> DyckPath:
    """Search the whole frame for the unique sweep preimage."""
    for candidate in enumerate_paths(path.frame):
        if sweep(candidate) == path:
            return candidate
    raise SearchExhausted(f"no sweep preimage found for {path.steps}")


def bounce(path: DyckPath, strategy: str = "fuss") -> int:
    """area of the sweep preimage, bounce(D) = area(sweep^-1(D)).

    strategy "fuss" uses the linear-time tableau inversion (Fuss frames
    only); "brute" enumerates the frame.
    """
    from .core import area

    if strategy == "fuss":
        if path.frame.fuss is None:
            raise NotFuss(f"({path.frame.m}, {path.frame.n}) is not a Fuss frame")
        from .fuss import invert_fuss

        return area(invert_fuss(path))
    if strategy == "brute":
        return area(brute_invert_sweep(path))
    raise ValueError(f"unknown bounce strategy {strategy!r}")


def cobounce(path: DyckPath) -> int:
    """Complement of bounce within (m-1)(n-1)/2, Fuss frames only."""
    if path.frame.fuss is None:
        raise NotFuss(f"cobounce needs a Fuss frame, got ({path.frame.m}, {path.frame.n})")
    return path.frame.statistic_bound() - bounce(path)
