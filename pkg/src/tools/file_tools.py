"""
Output writers: CSV data files with fixed float formats, the JSON run report, checksums
"""
import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Union

import pandas as pd
from pydantic import BaseModel

from src.utils import get_logger

logger = get_logger("tools.files")

PathLike = Union[str, Path]


class ManifestEntry(BaseModel):
    """One emitted data file"""

    file: str
    sha256: str
    bytes: int


def file_checksum(path: PathLike) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def save_frame(frame: pd.DataFrame, output_dir: PathLike, filename: str, float_format: str) -> ManifestEntry:
    """Write ``frame`` as UTF-8 CSV (``\\n`` line endings, no index) and describe it for the manifest"""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / filename
    frame.to_csv(path, index=False, float_format=float_format, lineterminator="\n", encoding="utf-8")
    entry = ManifestEntry(file=filename, sha256=file_checksum(path), bytes=path.stat().st_size)
    logger.info(f"Wrote {path} ({entry.bytes} bytes)")
    return entry


def save_report(report: Dict[str, Any], output_dir: PathLike, filename: str = "run_report.json") -> Path:
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / filename
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2, sort_keys=False, default=str)
        f.write("\n")
    logger.info(f"Wrote run report {path}")
    return path
