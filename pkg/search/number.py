"""Minimal-size scans: the partition number of a kind, with certificates."""
from dataclasses import dataclass
from typing import Optional

from tqdm import tqdm

from search.certificate import Certificate
from search.engine import SearchOptions, exists_bad_coloring
from witnesses.kinds import KindSpec


@dataclass
class NumberResult:
    spec: KindSpec
    lower: int
    upper: Optional[int] = None
    lower_certificate: Optional[Certificate] = None
    upper_certificate: Optional[Certificate] = None
    divisibility: bool = True

    @property
    def key(self) -> str:
        return self.spec.result_key(self.divisibility)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.upper if self.exact else None

    def summary(self) -> str:
        if self.exact:
            return '{}={}'.format(self.key, self.value)
        return '{} in [{}, {}]'.format(self.key, self.lower, '?' if self.upper is None else self.upper)

    def to_json(self):
        return {'spec': self.spec.to_json(), 'lower': self.lower, 'upper': self.upper,
                'exact': self.exact, 'divisibility': self.divisibility}


def next_admissible(spec: KindSpec, size: int, divisibility: bool) -> int:
    size += 1
    while not spec.admissible(size, divisibility):
        size += 1
    return size


def compute_number(spec: KindSpec, max_size: int, options: Optional[SearchOptions] = None) -> NumberResult:
    """
    Scan admissible sizes upwards. A bad colouring at size s proves value > s; the first
    size without one is the value when nothing below it ran out of budget.
    """
    options = options or SearchOptions()
    first = spec.first_size(options.divisibility)
    assert max_size >= first, 'max size {} below the smallest admissible size {}'.format(max_size, first)
    result = NumberResult(spec, first, divisibility=options.divisibility)
    sizes = [s for s in range(first, max_size + 1) if spec.admissible(s, options.divisibility)]
    for size in tqdm(sizes, desc=spec.label, disable=not options.progress, leave=False):
        verdict = exists_bad_coloring(spec, size, options)
        if verdict.verdict == 'bad':
            result.lower = next_admissible(spec, size, options.divisibility)
            result.lower_certificate = Certificate.from_verdict(spec, size, verdict, options.divisibility)
        elif verdict.verdict == 'none-exists':
            result.upper = size
            result.upper_certificate = Certificate.from_verdict(spec, size, verdict, options.divisibility)
            break
    return result
