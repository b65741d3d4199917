"""Bundled worked examples and their expected values.

Each example runs a profile or a chain pair from the data directory and is
compared cell by cell against the numbers below.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd

from src.chains import augment_ranks, duality_rank_check, hi_from_pair, hi_via_cone
from src.config import load_settings
from src.documents import load_chain, load_profile
from src.errors import UnknownExampleError
from src.stability import analyze


logger = logging.getLogger(__name__)

PROFILE_EXAMPLES: Dict[str, Dict[str, object]] = {
    "intro-cubic": {
        "smooth": [1, 2, 1],
        "intersection_space": [1, 2, 0],
        "mu_total": 1,
        "stable": True,
        "euler_identity": (-4, -4),
    },
    "conic": {
        "smooth": [1, 0, 1],
        "intersection_space": [1, 0, 0],
        "link_b0": 2,
        "stable": True,
        "euler_identity": (-4, -4),
    },
    "kummer": {
        "smooth": [1, 0, 22, 0, 1],
        "intersection_space": [1, 15, 6, 15, 0],
        "singular": [1, 0, 6, 0, 1],
        "link_truncated_euler": 16,
        "stable": False,
        "euler_identity": (-32, -32),
        "middle_bounds": (6, 22),
    },
    "fermat-quintic-125": {
        "smooth": [1, 0, 1, 204, 1, 0, 1],
        "intersection_space": [1, 124, 1, 204, 1, 124, 0],
        "singular": [1, 0, 1, 103, 25, 0, 1],
        "mu_total": 125,
        "rho": 101,
        "stable": True,
        "euler_identity": (-500, -500),
        "middle_bounds": (103, 204),
    },
    "plane-quintic-16": {
        "smooth": [1, 0, 1, 204, 1, 0, 1],
        "intersection_space": [1, 15, 1, 204, 1, 15, 0],
        "singular": [1, 0, 1, 189, 2, 0, 1],
        "link_truncated_euler": 32,
        "rho": 15,
        "stable": True,
        "euler_identity": (-64, -64),
    },
}

CHAIN_EXAMPLES: Dict[str, Dict[str, object]] = {
    "pinched-torus": {"hi_from_pair": [1, 2, 0], "hi_via_cone": [1, 2, 0], "duality": True},
    "disk-pair": {"hi_from_pair": [1, 0, 0], "hi_via_cone": [1, 0, 0], "duality": True},
}


def example_ids() -> List[str]:
    return list(PROFILE_EXAMPLES) + list(CHAIN_EXAMPLES)


def _profile_values(path: Path) -> Dict[str, object]:
    report = analyze(load_profile(path).to_profile())
    values = {
        "smooth": report.smooth.ranks,
        "intersection_space": report.intersection_space.ranks,
        "singular": report.singular.ranks if report.singular is not None else None,
        "mu_total": report.mu_total,
        "link_b0": report.link_b0,
        "link_truncated_euler": report.link_truncated_euler,
        "rho": report.rho,
        "stable": report.verdict.stable,
        "middle_bounds": (report.middle_bounds.lower, report.middle_bounds.upper),
    }
    if report.euler_identity is not None:
        values["euler_identity"] = (report.euler_identity.lhs, report.euler_identity.rhs)
    return values


def _chain_values(path: Path) -> Dict[str, object]:
    pair = load_chain(path).to_pair()
    return {
        "hi_from_pair": augment_ranks(hi_from_pair(pair)).ranks,
        "hi_via_cone": augment_ranks(hi_via_cone(pair)).ranks,
        "duality": duality_rank_check(pair),
    }


def run_example(example_id: str, data_dir: Optional[Path] = None) -> pd.DataFrame:
    data_dir = Path(data_dir) if data_dir is not None else load_settings().data_dir
    if example_id in PROFILE_EXAMPLES:
        expected = PROFILE_EXAMPLES[example_id]
        actual = _profile_values(data_dir / "profiles" / f"{example_id}.json")
    elif example_id in CHAIN_EXAMPLES:
        expected = CHAIN_EXAMPLES[example_id]
        actual = _chain_values(data_dir / "chains" / f"{example_id}.json")
    else:
        raise UnknownExampleError(f"Unknown example {example_id!r}; known: {', '.join(example_ids())}")
    rows = []
    for quantity, value in expected.items():
        got = actual.get(quantity)
        rows.append({
            "example": example_id,
            "quantity": quantity,
            "expected": str(value),
            "actual": str(got),
            "status": "PASS" if got == value else "FAIL",
        })
    frame = pd.DataFrame(rows, columns=["example", "quantity", "expected", "actual", "status"])
    failures = int((frame["status"] == "FAIL").sum())
    logger.info("Example %s: %d checks, %d failed", example_id, len(frame), failures)
    return frame


def reproduce(selection: str = "all", data_dir: Optional[Path] = None) -> Tuple[pd.DataFrame, bool]:
    ids = example_ids() if selection == "all" else [selection]
    frame = pd.concat([run_example(example_id, data_dir) for example_id in ids], ignore_index=True)
    return frame, bool((frame["status"] == "PASS").all())
