"""
Tools package initialization
"""
from .file_tools import ManifestEntry, file_checksum, save_frame, save_report

__all__ = ["ManifestEntry", "file_checksum", "save_frame", "save_report"]
