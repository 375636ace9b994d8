"""
Antimagic Toolkit Configuration

Single reference for the constants shared by the library and the CLI:
exit codes, generator families, search limits and output formats.
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

# Exit codes (stable CLI contract)
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_UNSUPPORTED = 2
EXIT_BAD_INPUT = 3

# Generator families
FAMILIES = (
    'cycle',
    'complete',
    'circulant',
    'disjoint_union',
    'random_regular',
    'path',
    'petersen',
)

# Product edge provenance kinds
G1_COPY = 'G1'
G2_COPY = 'G2'

# Pairing-model samples tried before giving up
RANDOM_REGULAR_RETRIES = 10_000

# Brute force limits
DISPATCH_BRUTE_FORCE_MAX_EDGES = 10   # per product component
ANTIMAGIC_SEARCH_MAX_EDGES = 10
MIN_DELTA_SEARCH_MAX_EDGES = 8
SEARCH_NODE_CAP = 20_000_000

# Label modes and report formats
LABEL_MODES = ('approx-magic', 'antimagic-product', 'brute')
OUTPUT_FORMATS = ('text', 'json')


@dataclass
class RunConfig:
    """Validated view of the parsed command line"""
    command: str
    inputs: List[Path] = field(default_factory=list)
    output: Optional[Path] = None
    family: Optional[str] = None
    params: List[str] = field(default_factory=list)
    seed: int = 0
    budget: int = DISPATCH_BRUTE_FORCE_MAX_EDGES
    mode: Optional[str] = None
    output_format: str = 'text'
    provenance: Optional[Path] = None
    labeling: Optional[Path] = None
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        inputs = [Path(p) for p in getattr(args, 'inputs', None) or []]
        if getattr(args, 'graph', None):
            inputs.insert(0, Path(args.graph))

        config = cls(
            command=args.command,
            inputs=inputs,
            output=Path(args.output) if getattr(args, 'output', None) else None,
            family=getattr(args, 'family', None),
            params=list(getattr(args, 'params', None) or []),
            seed=getattr(args, 'seed', 0),
            budget=getattr(args, 'budget', DISPATCH_BRUTE_FORCE_MAX_EDGES),
            mode=getattr(args, 'mode', None),
            output_format=getattr(args, 'format', 'text'),
            provenance=Path(args.provenance) if getattr(args, 'provenance', None) else None,
            labeling=Path(args.labeling) if getattr(args, 'labeling', None) else None,
            verbose=getattr(args, 'verbose', False),
        )
        config.validate()
        return config

    def validate(self):
        """Raise ValueError on unusable settings"""
        if self.budget < 0:
            raise ValueError(f"--budget must be >= 0, got {self.budget}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"--format must be one of {OUTPUT_FORMATS}")
        for path in self.inputs + [p for p in (self.provenance, self.labeling) if p]:
            if not path.is_file():
                raise ValueError(f"Input file '{path}' not found")
