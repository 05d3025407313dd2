"""
Workflows package initialization
"""
from .gepu_pipeline import GepuPipeline, PipelineState, run_pipeline
from .report import RunReport

__all__ = ["GepuPipeline", "PipelineState", "run_pipeline", "RunReport"]
