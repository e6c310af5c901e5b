# services/analysis.py
"""
Ranking methodology for comparing algorithms over a table of functions:
per-function competition ranks on the mean, rank-sums per algorithm, and a
final lexicographic rank over the rank-sums.
"""
import math
from dataclasses import dataclass
from typing import Dict

import numpy as np
from scipy.stats import rankdata


class RankingError(ValueError):
    pass


@dataclass
class RankTable:
    per_function_ranks:  Dict[str, Dict[str, int]]
    rank_sums:           Dict[str, int]
    lexicographic_ranks: Dict[str, int]

    @property
    def functions(self):
        return list(self.per_function_ranks)

    @property
    def algorithms(self):
        return list(self.rank_sums)


def _rank(scores, method):
    if not scores:
        raise RankingError("nothing to rank")
    names  = list(scores)
    values = np.array([scores[n] for n in names], dtype=float)
    if np.any(np.isnan(values)):
        bad = [n for n, v in zip(names, values) if math.isnan(v)]
        raise RankingError(f"NaN score for {', '.join(bad)}")
    ranks = rankdata(values, method=method)
    return {name: int(r) for name, r in zip(names, ranks)}


def competition_rank(means):
    """Smaller mean ranks better; ties share the minimal rank (1-2-2-4)."""
    return _rank(means, 'min')


def rank_sum(per_function_ranks, algorithm):
    total = 0
    for function_id, ranks in per_function_ranks.items():
        if algorithm not in ranks:
            raise RankingError(f"no rank for {algorithm} on {function_id}")
        total += ranks[algorithm]
    return total


def lexicographic_rank(rank_sums):
    """Re-rank algorithms by rank-sum; tied sums share a rank and the next sum follows on (1-2-2-3)."""
    return _rank(rank_sums, 'dense')


def build_rank_table(means_by_function):
    """means_by_function: {function: {algorithm: mean}}, algorithms in a fixed order."""
    if not means_by_function:
        raise RankingError("no functions to rank")
    per_function = {f: competition_rank(means) for f, means in means_by_function.items()}
    algorithms = list(next(iter(means_by_function.values())))
    sums = {a: rank_sum(per_function, a) for a in algorithms}
    return RankTable(
        per_function_ranks=per_function,
        rank_sums=sums,
        lexicographic_ranks=lexicographic_rank(sums),
    )


def rank_summaries(summaries):
    means = {}
    for cell in summaries:
        means.setdefault(cell.function_id, {})[cell.algorithm] = cell.mean
    return build_rank_table(means)
