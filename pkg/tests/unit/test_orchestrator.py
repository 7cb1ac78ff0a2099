"""Unit tests for the pipeline, golden table and rendering."""
import csv
import io
import json

import pytest

from models.plan import parse_plans
from oracle.points import instantiate
from models.report import Case, ClassificationReport
from orchestrator.golden import diff, load_golden, parse_string
from orchestrator.pipeline import RunOptions, classify_plan, run_plans
from orchestrator.render import (
    REFERENCE_ROWS,
    render_enumeration,
    render_reports,
    render_table,
    summary_rows,
)
from cycle.enumerate import enumerate_plans
from tests.fixtures.plans import named_plan

FAST = RunOptions(seeds=[1, 2], samples=120, workers=1, images=False)
WITH_IMAGES = RunOptions(seeds=[1, 2], samples=120, workers=1)


class TestClassifyPlan:
    """Tests for classify_plan."""
    
    def test_type_one_with_images(self):
        """Test a full TypeI run with images and the threefold prediction."""
        report = classify_plan(named_plan("k5_type1"), RunOptions(seeds=[1, 2], samples=120))
        assert report.errors == []
        assert report.case == Case.TYPE_I
        assert (report.h0_antican, report.h0_biantican, report.h0_2F, report.movable_selfint) == (1, 5, 7, 4)
        assert report.fixed_part == {0: 1, 2: 1, 3: 1, 5: 1, 7: 1, 8: 1}
        assert report.quadric_count == 2
        assert report.image_dimension == 2
        assert (report.threefold_quadrics, report.threefold_dimension) == (3, 3)
        assert report.rule_h0 == report.oracle_h0 == {1: 1, 2: 5}
    
    def test_conic_fibration_threefold_prediction(self):
        """Test that the TypeIII surface predicts a threefold cut out by two quadrics."""
        report = classify_plan(named_plan("k4_type3"), WITH_IMAGES)
        assert report.case == Case.TYPE_III
        assert (report.quadric_count, report.image_dimension) == (1, 1)
        assert (report.threefold_quadrics, report.threefold_dimension) == (2, 2)
    
    def test_images_skip_non_generic_seed(self, monkeypatch):
        """Test that images are taken at a seed reproducing the certified h0 values."""
        used = []
        monkeypatch.setattr("orchestrator.pipeline.generic_seed", lambda plan, expected, seeds: 5)
        monkeypatch.setattr("orchestrator.pipeline.instantiate",
                            lambda plan, seed: used.append(seed) or instantiate(plan, seed))
        report = classify_plan(named_plan("k4_3131"), WITH_IMAGES)
        assert used == [5]
        assert report.case == Case.TYPE_I
    
    def test_excluded_defers_rule(self):
        """Test that an excluded plan defers the h0(-2K) rule without errors."""
        report = classify_plan(named_plan("k6_string1"), FAST)
        assert report.case == Case.EXCLUDED_H0_GEQ_3
        assert report.rule_h0[2] is None
        assert report.oracle_h0[1] == 3
        assert report.errors == []
    
    def test_invalid_plan_is_recorded(self):
        """Test that a plan that cannot be built is reported rather than raised."""
        [plan] = parse_plans(json.dumps({"steps": [{"kind": "Node", "target": 5}] * 4}))
        report = classify_plan(plan, FAST)
        assert report.case is None
        assert "StructuralError" in report.errors[0]
    
    def test_rule_oracle_mismatch_is_recorded(self, monkeypatch):
        """Test that disagreement between rule and oracle is recorded on the report."""
        monkeypatch.setattr("orchestrator.pipeline.h0_rule_for_cycle", lambda d, cycle: 2)
        report = classify_plan(named_plan("k4_3131"), FAST)
        assert any("mismatch" in e for e in report.errors)


class TestRunPlans:
    """Tests for run_plans."""
    
    def test_sorted_by_canonical_string(self):
        """Test that reports come back ordered by canonical string."""
        names = ["k6_string3", "k2_type2", "k4_type3"]
        reports = run_plans([named_plan(n) for n in names], FAST)
        strings = [r.canonical_string for r in reports]
        assert strings == sorted(strings)
    
    def test_worker_pool_matches_sequential(self):
        """Test that the worker pool gives the same reports as a sequential run."""
        plans = [named_plan(n) for n in ("k3_type2", "k2_excluded", "k4_3131")]
        sequential = run_plans(plans, FAST)
        pooled = run_plans(plans, RunOptions(seeds=[1, 2], samples=120, workers=2, images=False))
        assert [r.model_dump() for r in pooled] == [r.model_dump() for r in sequential]


class TestGolden:
    """Tests for the golden expectation table."""
    
    def test_seventeen_rows(self):
        """Test that the golden table has seventeen rows covering every case."""
        golden = load_golden()
        assert len(golden) == 17
        assert {row.case for row in golden.values()} == set(Case)
    
    def test_type_one_rows_have_consistent_h0_2F(self):
        """Test that h0(2F) is h0(-2K) plus two on classified rows."""
        for row in load_golden().values():
            if row.case.is_classified:
                assert row.values["h0_2F"] == row.values["h0_biantican"] + 2
    
    def test_parse_string(self):
        """Test parsing a string cell with stray spaces."""
        assert parse_string("(-3,-1, -3,-1)") == (-3, -1, -3, -1)
    
    def test_diff_reports_case_mismatch(self):
        """Test that a wrong case is reported with its source."""
        report = classify_plan(named_plan("k2_type2"), WITH_IMAGES)
        assert diff([report], load_golden()) == []
        report.case = Case.TYPE_III
        problems = diff([report], load_golden())
        assert any("expected TypeII" in p for p in problems)
        assert any("[double-solid classification k=2]" in p for p in problems)
    
    def test_every_row_names_its_source(self):
        """Test that each golden row records where its expected values come from."""
        golden = load_golden()
        assert all(row.source for row in golden.values())
    
    def test_threefold_columns(self):
        """Test that classified rows predict the threefold image and the others leave it blank."""
        for row in load_golden().values():
            if row.case.is_classified:
                assert row.values["threefold_quadrics"] == row.values["quadric_count"] + 1
            else:
                assert row.values.get("threefold_quadrics") is None
    
    def test_diff_requires_all_rows(self):
        """Test that unmatched golden rows are reported when all are required."""
        report = classify_plan(named_plan("k2_type2"), WITH_IMAGES)
        assert len(diff([report], load_golden(), require_all=True)) == 16
    
    def test_rotated_strings_in_file(self, tmp_path):
        """Test that golden strings may be written in any rotation."""
        path = tmp_path / "golden.csv"
        path.write_text("string,case,h0_antican\n\"(-1,-3,-1,-3)\",TypeII,1\n")
        golden = load_golden(path)
        report = classify_plan(named_plan("k2_type2"), WITH_IMAGES)
        assert diff([report], golden) == []


class TestRender:
    """Tests for output formats."""
    
    def test_enumeration_json_loads_as_plans(self):
        """Test that enumeration JSON loads back as plans."""
        entries = enumerate_plans(nodes_only=True)
        text = render_enumeration(entries, "json")
        assert [p.steps for p in parse_plans(text)] == [e.plan.steps for e in entries]
    
    def test_enumeration_markdown(self):
        """Test the markdown enumeration table."""
        text = render_enumeration(enumerate_plans(nodes_only=True), "markdown")
        assert text.count("\n") == 5
        assert "(-3,-1,-3,-1,-3,-1,-3,-1,-3,-1,-3,-1)" in text
    
    def test_reports_csv(self):
        """Test the CSV report columns."""
        reports = run_plans([named_plan("k4_type3")], FAST)
        rows = list(csv.reader(io.StringIO(render_reports(reports, "csv"))))
        assert rows[0][0] == "plan"
        assert rows[1][3] == "TypeIII"
        assert rows[1][8] == "C1 + 2*C2 + C3 + C5 + 2*C6 + C7"
    
    def test_table_reference_rows(self):
        """Test that the summary table ends with the reference rows."""
        reports = run_plans([named_plan("k6_string3")], FAST)
        rows = summary_rows(reports)
        assert rows[-2:] == REFERENCE_ROWS
        assert rows[0]["h0_2F"] == 9
        assert "not computed" in render_table(reports, "markdown")
    
    def test_unknown_format(self):
        """Test that an unknown output format raises ValueError."""
        with pytest.raises(ValueError):
            render_table([], "yaml")
