"""
GEPU pipeline workflow using LangGraph

validate -> ingest -> index -> metrics -> regress -> emit, with every node
routing to handle_error once a stage records a GepuError.
"""
import operator
import time
import warnings
from functools import wraps
from typing import Annotated, Any, Callable, Dict, List, Optional, Sequence, TypedDict

from langgraph.graph import END, START, StateGraph

from src.config.run_config import PATH_KEYS, RunConfig, validate_config
from src.config.settings import settings
from src.econometrics import (
    Table1Row,
    Table2,
    overlay_frame,
    run_table1,
    run_table2,
    table1_frame,
)
from src.ingest import (
    DailyPricePanel,
    EpuPanel,
    GdpWeightTable,
    load_daily_prices,
    load_epu_panel,
    load_gdp_weights,
    month_key,
    restrict_months,
)
from src.market_metrics import (
    MonthlySeries,
    avg_correlation_series,
    daily_returns,
    volatility_series,
)
from src.pca_index import GepuSeries, compute_gepu_gdp, compute_gepu_pca
from src.tools.file_tools import ManifestEntry, save_frame, save_report
from src.utils import get_logger
from src.utils.errors import ConfigError, GepuError, SchemaError
from src.workflows.report import RunReport

logger = get_logger("workflows.gepu_pipeline")

STAGES = ("ingest", "index", "metrics", "regress")
METHODS = ("pca", "gdp")


class PipelineState(TypedDict, total=False):
    """State passed between pipeline stages"""

    config: RunConfig
    stages: List[str]
    emit: List[str]
    methods: List[str]
    required_paths: List[str]
    panel: EpuPanel
    prices: DailyPricePanel
    weights: GdpWeightTable
    gepu_pca: List[GepuSeries]
    gepu_gdp: GepuSeries
    table1: List[Table1Row]
    vol: MonthlySeries
    corr: MonthlySeries
    table2: Table2
    manifest: List[ManifestEntry]
    summary: Annotated[Dict[str, Any], operator.or_]
    warnings: Annotated[List[str], operator.add]
    timings: Annotated[Dict[str, float], operator.or_]
    error: Optional[GepuError]


def _stage(name: str) -> Callable:
    """Time a node, record warnings it raises and turn a GepuError into error state"""

    def decorator(step: Callable[["GepuPipeline", PipelineState], Dict[str, Any]]):
        @wraps(step)
        def wrapper(self: "GepuPipeline", state: PipelineState) -> Dict[str, Any]:
            if name in STAGES and name not in state.get("stages", []):
                return {}
            logger.info(f"Executing {name} step")
            started = time.perf_counter()
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                try:
                    update = step(self, state) or {}
                except GepuError as e:
                    logger.error(f"{name} step failed: {e}")
                    update = {"error": e}
            seen = list(dict.fromkeys(f"{w.category.__name__}: {w.message}" for w in caught))
            for message in seen:
                logger.warning(message)
            update["warnings"] = update.get("warnings", []) + seen
            update["timings"] = {name: round(time.perf_counter() - started, 6)}
            return update

        return wrapper

    return decorator


class GepuPipeline:
    """Workflow reproducing the index construction and regression study from three input files"""

    def __init__(self):
        self.workflow = self._create_workflow()
        logger.info("GepuPipeline initialized")

    def _create_workflow(self):
        workflow = StateGraph(PipelineState)

        workflow.add_node("validate", self.validate_step)
        workflow.add_node("ingest", self.ingest_step)
        workflow.add_node("index", self.index_step)
        workflow.add_node("metrics", self.metrics_step)
        workflow.add_node("regress", self.regress_step)
        workflow.add_node("emit", self.emit_step)
        workflow.add_node("handle_error", self.handle_error)

        workflow.add_edge(START, "validate")
        chain = ["validate", "ingest", "index", "metrics", "regress", "emit"]
        for node, following in zip(chain, chain[1:] + [END]):
            workflow.add_conditional_edges(
                node,
                self._should_continue,
                {"continue": following, "error": "handle_error"},
            )
        workflow.add_edge("handle_error", END)

        return workflow.compile()

    @staticmethod
    def _should_continue(state: PipelineState) -> str:
        return "error" if state.get("error") is not None else "continue"

    @_stage("validate")
    def validate_step(self, state: PipelineState) -> Dict[str, Any]:
        violations = validate_config(state["config"], state.get("required_paths", PATH_KEYS))
        if violations:
            keys = sorted({v.split(" ")[0].rstrip(":") for v in violations})
            raise ConfigError("; ".join(violations), operation="validate_config", location=", ".join(keys))
        return {}

    @_stage("ingest")
    def ingest_step(self, state: PipelineState) -> Dict[str, Any]:
        config = state["config"]
        update: Dict[str, Any] = {}
        summary: Dict[str, Any] = {}

        ingest_only = state["stages"] == ["ingest"]
        if config.epu_path is not None and ("index" in state["stages"] or ingest_only):
            panel = load_epu_panel(config.epu_path, config.expected_economies)
            if config.month_range:
                panel = restrict_months(panel, *config.month_range)
            update["panel"] = panel
            summary["epu_panel"] = {
                "months": len(panel.months),
                "economies": panel.economies,
                "first": month_key(panel.first_month),
                "last": month_key(panel.last_month),
            }
        if config.prices_path is not None and ("metrics" in state["stages"] or ingest_only):
            prices = load_daily_prices(config.prices_path)
            update["prices"] = prices
            summary["daily_prices"] = {
                "dates": len(prices.dates),
                "series": len(prices.series),
                "absent_cells": prices.absent_count(),
            }
        wants_gdp = "index" in state["stages"] and "gdp" in state.get("methods", [])
        if config.gdp_path is not None and (wants_gdp or ingest_only):
            weights = load_gdp_weights(config.gdp_path)
            update["weights"] = weights
            summary["gdp_weights"] = {"years": weights.years}

        update["summary"] = {"ingest": summary}
        return update

    @_stage("index")
    def index_step(self, state: PipelineState) -> Dict[str, Any]:
        config = state["config"]
        panel = state["panel"]
        methods = state.get("methods", list(METHODS))
        update: Dict[str, Any] = {}
        notes: List[str] = []
        summary: Dict[str, Any] = {}

        if "pca" in methods:
            series = [compute_gepu_pca(panel, t) for t in config.window_sizes]
            update["gepu_pca"] = series
            for s in series:
                degenerate = [m for m, e in s.eigen_history.items() if e.degenerate]
                negative = [m for m, e in s.eigen_history.items() if (e.eigenvector < 0).any()]
                if degenerate:
                    notes.append(
                        f"T={s.window_size}: {len(degenerate)} window(s) with degenerate leading spectrum "
                        f"(first {month_key(degenerate[0])})"
                    )
                if negative:
                    notes.append(f"T={s.window_size}: {len(negative)} window(s) with negative eigenportfolio weights")
                summary[f"T={s.window_size}"] = {
                    "t0": month_key(s.start_month),
                    "obs": s.count,
                    "mean_lambda1_over_n": float(s.explained_share.mean()),
                }
        if "gdp" in methods:
            base = tuple(config.gdp_base_period) if config.gdp_base_period else None
            update["gepu_gdp"] = compute_gepu_gdp(panel, state["weights"], base_period=base)
        if "gepu_pca" in update and "gepu_gdp" in update:
            rows = run_table1(update["gepu_pca"], update["gepu_gdp"])
            update["table1"] = rows
            summary["table1"] = [r.model_dump() for r in rows]

        update["warnings"] = notes
        update["summary"] = {"index": summary}
        return update

    @_stage("metrics")
    def metrics_step(self, state: PipelineState) -> Dict[str, Any]:
        config = state["config"]
        prices = state["prices"]
        if config.world_index_id not in prices.series:
            raise SchemaError(
                f"world index {config.world_index_id!r} is not a column of the price file",
                operation="run_pipeline",
                location=f"prices_path={config.prices_path}",
                module="market_metrics",
            )
        returns = daily_returns(prices, holiday_mode=config.holiday_mode, return_kind=config.return_mode)
        vol = volatility_series(returns, config.world_index_id, min_obs=config.min_volatility_obs)
        corr = avg_correlation_series(returns, min_overlap=config.min_overlap, exclude=[config.world_index_id])
        notes = []
        if int(corr.metadata["excluded_pairs"]):
            notes.append(f"average correlation excluded {corr.metadata['excluded_pairs']} month-pair(s)")
        return {
            "vol": vol,
            "corr": corr,
            "warnings": notes,
            "summary": {"metrics": {"volatility": vol.metadata, "avg_correlation": corr.metadata}},
        }

    @_stage("regress")
    def regress_step(self, state: PipelineState) -> Dict[str, Any]:
        config = state["config"]
        table2 = run_table2(
            state["gepu_pca"],
            state["gepu_gdp"],
            state["vol"],
            state["corr"],
            se_mode=config.se_mode,
            hac_lags=config.hac_lags,
            standardize=config.standardize_gepu,
        )
        return {
            "table2": table2,
            "summary": {"regress": {"table2": table2.summary(), "metadata": table2.metadata}},
        }

    @_stage("emit")
    def emit_step(self, state: PipelineState) -> Dict[str, Any]:
        config = state["config"]
        out = config.output_dir
        emit = state.get("emit", [])
        series_fmt = settings.series_float_format()
        table_fmt = settings.table_float_format()
        manifest: List[ManifestEntry] = []

        if "index" in emit:
            for s in state.get("gepu_pca", []):
                manifest.append(save_frame(s.to_frame(), out, f"gepu_pca_T{s.window_size}.csv", series_fmt))
            if "gepu_gdp" in state:
                manifest.append(save_frame(state["gepu_gdp"].to_frame(), out, "gepu_gdp.csv", series_fmt))
            if "table1" in state:
                manifest.append(save_frame(table1_frame(state["table1"]), out, "table1.csv", table_fmt))
        if "metrics" in emit:
            manifest.append(save_frame(state["vol"].to_frame(), out, "volatility.csv", series_fmt))
            manifest.append(save_frame(state["corr"].to_frame(), out, "avg_correlation.csv", series_fmt))
        if "regress" in emit:
            manifest.append(save_frame(state["table2"].to_frame(), out, "table2.csv", table_fmt))
            overlay = next(
                s for s in state["gepu_pca"] if s.window_size == config.effective_overlay_window
            )
            for name, dep in (("volatility", state["vol"]), ("correlation", state["corr"])):
                frame = overlay_frame(dep, overlay, state.get("gepu_gdp"))
                manifest.append(save_frame(frame, out, f"overlay_{name}.csv", series_fmt))

        return {"manifest": manifest}

    def handle_error(self, state: PipelineState) -> Dict[str, Any]:
        error = state["error"]
        logger.error(f"Pipeline stopped: {error.__class__.__name__}: {error}")
        return {}

    def run(
        self,
        config: RunConfig,
        command: str = "all",
        stages: Sequence[str] = STAGES,
        emit: Optional[Sequence[str]] = None,
        methods: Sequence[str] = METHODS,
        required_paths: Sequence[str] = PATH_KEYS,
    ) -> Dict[str, Any]:
        """Run the requested stages and write the data files plus ``run_report.json``"""
        logger.info(f"Starting GEPU pipeline: {command} (stages: {', '.join(stages)})")
        initial_state: PipelineState = {
            "config": config,
            "stages": list(stages),
            "emit": list(stages if emit is None else emit),
            "methods": list(methods),
            "required_paths": list(required_paths),
            "summary": {},
            "warnings": [],
            "timings": {},
        }
        final_state = self.workflow.invoke(initial_state)

        error = final_state.get("error")
        report = RunReport(
            command=command,
            status="error" if error else "ok",
            config=config.echo(),
            stages=list(stages),
            timings=final_state.get("timings", {}),
            warnings=final_state.get("warnings", []),
            summary=final_state.get("summary", {}),
            manifest=final_state.get("manifest", []),
            error=error.to_report() if error else None,
        )
        if error is None or not isinstance(error, ConfigError):
            save_report(report.model_dump(mode="json"), config.output_dir)

        return {
            "success": error is None,
            "report": report,
            "error": error,
            "state": final_state,
        }


def run_pipeline(config: RunConfig, **kwargs) -> RunReport:
    """Run the full pipeline; raises the recorded GepuError on failure"""
    result = GepuPipeline().run(config, **kwargs)
    if not result["success"]:
        raise result["error"]
    return result["report"]
