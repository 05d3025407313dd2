"""
Run report: config echo, stage timings, warnings and the output manifest
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.tools.file_tools import ManifestEntry


class RunReport(BaseModel):
    command: str
    status: str = "ok"
    config: Dict[str, Any] = Field(default_factory=dict)
    stages: List[str] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)
    manifest: List[ManifestEntry] = Field(default_factory=list)
    error: Optional[Dict[str, Any]] = None

    def checksums(self) -> Dict[str, str]:
        return {entry.file: entry.sha256 for entry in self.manifest}
