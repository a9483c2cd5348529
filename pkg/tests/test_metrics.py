import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bcpredict.metrics import (
    ConfusionMatrix,
    accuracy,
    auc_trapezoid,
    confusion_matrix,
    evaluate_predictions,
    format_report,
    precision_recall_f1,
    roc_curve,
    write_roc_csv,
)
from oracles import mann_whitney_auc


class TestConfusionMatrix:
    def test_perfect_prediction(self):
        cm = confusion_matrix([1, 0, 1, 0], [1, 0, 1, 0])
        assert (cm.fp, cm.fn) == (0, 0)
        assert (cm.tp, cm.tn) == (2, 2)

    def test_inverted_prediction(self):
        cm = confusion_matrix([1, 0, 1], [0, 1, 0])
        assert (cm.tp, cm.tn) == (0, 0)
        assert (cm.fp, cm.fn) == (1, 2)

    def test_enumerated_case(self):
        cm = confusion_matrix([1, 1, 0, 0], [1, 0, 1, 0])
        assert (cm.tp, cm.fn, cm.fp, cm.tn) == (1, 1, 1, 1)

    def test_counts_sum_to_length(self):
        rng = np.random.default_rng(0)
        t = rng.integers(0, 2, size=57)
        p = rng.integers(0, 2, size=57)
        assert confusion_matrix(t, p).total == 57

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="mismatch"):
            confusion_matrix([1, 0], [1])

    def test_non_binary_rejected(self):
        with pytest.raises(ValueError, match="0/1"):
            confusion_matrix([1, 2], [1, 0])


class TestAccuracy:
    def test_headline_arithmetic(self):
        assert accuracy(ConfusionMatrix(tp=50, fp=1, fn=1, tn=48)) == 0.98

    def test_perfect(self):
        assert accuracy(ConfusionMatrix(tp=3, fp=0, fn=0, tn=9)) == 1.0

    def test_all_wrong(self):
        assert accuracy(ConfusionMatrix(tp=0, fp=5, fn=5, tn=0)) == 0.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            accuracy(ConfusionMatrix(tp=0, fp=0, fn=0, tn=0))


class TestPrecisionRecallF1:
    def test_balanced_eight_two(self):
        s = precision_recall_f1(ConfusionMatrix(tp=8, fp=2, fn=2, tn=0))
        assert (s.precision, s.recall, s.f1) == (0.8, 0.8, pytest.approx(0.8))
        assert s.degenerate == ()

    def test_no_predicted_positives_flagged(self):
        s = precision_recall_f1(ConfusionMatrix(tp=0, fp=0, fn=3, tn=5))
        assert s.precision == 0.0
        assert "precision" in s.degenerate

    def test_no_actual_positives_flagged(self):
        s = precision_recall_f1(ConfusionMatrix(tp=0, fp=2, fn=0, tn=5))
        assert s.recall == 0.0
        assert "recall" in s.degenerate

    def test_all_perfect(self):
        s = precision_recall_f1(ConfusionMatrix(tp=10, fp=0, fn=0, tn=4))
        assert (s.precision, s.recall, s.f1) == (1.0, 1.0, 1.0)

    def test_values_bounded(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            t = rng.integers(0, 2, size=20)
            p = rng.integers(0, 2, size=20)
            s = precision_recall_f1(confusion_matrix(t, p))
            assert 0.0 <= s.precision <= 1.0
            assert 0.0 <= s.recall <= 1.0
            assert 0.0 <= s.f1 <= 1.0


class TestRocCurve:
    def test_hand_enumerated_sweep(self):
        # five samples, scores descending, truth 1,1,0,1,0
        truth = [1, 1, 0, 1, 0]
        scores = [0.9, 0.8, 0.7, 0.6, 0.5]
        points = roc_curve(truth, scores)
        coords = [(p.fpr, p.tpr) for p in points]
        assert coords == [
            (0.0, 0.0),
            (0.0, 1 / 3),
            (0.0, 2 / 3),
            (1 / 2, 2 / 3),
            (1 / 2, 1.0),
            (1.0, 1.0),
        ]
        assert points[0].threshold == math.inf
        assert [p.threshold for p in points[1:]] == scores

    def test_perfect_separation_passes_top_left(self):
        points = roc_curve([1, 1, 0, 0], [0.9, 0.8, 0.2, 0.1])
        assert (0.0, 1.0) in [(p.fpr, p.tpr) for p in points]

    def test_all_tied_scores_collapse(self):
        points = roc_curve([1, 0, 1, 0], [0.4, 0.4, 0.4, 0.4])
        assert [(p.fpr, p.tpr) for p in points] == [(0.0, 0.0), (1.0, 1.0)]

    def test_single_class_rejected(self):
        with pytest.raises(ValueError, match="both classes"):
            roc_curve([1, 1, 1], [0.1, 0.2, 0.3])

    def test_monotone_non_decreasing(self):
        rng = np.random.default_rng(2)
        t = rng.integers(0, 2, size=40)
        t[0], t[1] = 0, 1
        s = rng.choice([0.1, 0.3, 0.5, 0.7, 0.9], size=40)
        points = roc_curve(t, s)
        for a, b in zip(points, points[1:]):
            assert b.fpr >= a.fpr
            assert b.tpr >= a.tpr


class TestAucTrapezoid:
    def test_perfect_curve(self):
        points = roc_curve([1, 1, 0, 0], [0.9, 0.8, 0.2, 0.1])
        assert auc_trapezoid(points) == 1.0

    def test_chance_diagonal(self):
        points = roc_curve([1, 0], [0.5, 0.5])
        assert auc_trapezoid(points) == 0.5

    def test_fully_reversed_scores(self):
        points = roc_curve([1, 1, 0, 0], [0.1, 0.2, 0.8, 0.9])
        assert auc_trapezoid(points) == 0.0

    def test_missing_endpoint_rejected(self):
        from bcpredict.metrics import RocPoint

        with pytest.raises(ValueError, match=r"\(0,0\)"):
            auc_trapezoid([RocPoint(0.1, 0.0, 1.0), RocPoint(1.0, 1.0, 0.0)])

    def test_unsorted_rejected(self):
        from bcpredict.metrics import RocPoint

        bad = [
            RocPoint(0.0, 0.0, math.inf),
            RocPoint(0.5, 0.8, 0.6),
            RocPoint(0.3, 0.9, 0.4),
            RocPoint(1.0, 1.0, 0.1),
        ]
        with pytest.raises(ValueError, match="sorted"):
            auc_trapezoid(bad)

    def test_matches_mann_whitney_with_ties(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            n = int(rng.integers(4, 31))
            t = rng.integers(0, 2, size=n)
            t[0], t[1] = 0, 1  # both classes present
            s = rng.choice([0.1, 0.25, 0.5, 0.75, 0.9], size=n)  # forced ties
            auc = auc_trapezoid(roc_curve(t, s))
            assert auc == pytest.approx(mann_whitney_auc(t, s), abs=1e-12)

    def test_reversal_identity(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            n = int(rng.integers(4, 25))
            t = rng.integers(0, 2, size=n)
            t[0], t[1] = 0, 1
            s = rng.normal(size=n)
            forward = auc_trapezoid(roc_curve(t, s))
            backward = auc_trapezoid(roc_curve(t, -s))
            assert forward + backward == pytest.approx(1.0, abs=1e-12)

    def test_invariant_under_monotone_transform(self):
        rng = np.random.default_rng(5)
        t = rng.integers(0, 2, size=30)
        t[0], t[1] = 0, 1
        s = rng.normal(size=30)
        base = auc_trapezoid(roc_curve(t, s))
        for transform in (np.tanh, lambda v: 3 * v + 7, lambda v: np.exp(v / 4)):
            assert auc_trapezoid(roc_curve(t, transform(s))) == pytest.approx(base, abs=1e-12)

    @given(st.integers(0, 2**32 - 1))
    def test_bounded_on_random_instances(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(4, 40))
        t = rng.integers(0, 2, size=n)
        t[0], t[1] = 0, 1
        s = rng.normal(size=n)
        assert 0.0 <= auc_trapezoid(roc_curve(t, s)) <= 1.0


class TestEvaluationReport:
    def make_report(self):
        rng = np.random.default_rng(6)
        t = rng.integers(0, 2, size=60)
        t[0], t[1] = 0, 1
        s = np.clip(rng.normal(0.5 + 0.3 * t, 0.2), 0.01, 0.99)
        return evaluate_predictions(t, s, threshold=0.5, protocol="unit-test protocol"), t, s

    def test_accuracy_is_exact_count_ratio(self):
        report, t, s = self.make_report()
        cm = report.confusion
        assert report.accuracy == (cm.tp + cm.tn) / report.n_test
        assert cm.total == report.n_test == 60

    def test_auc_recomputes_from_own_points(self):
        report, _, _ = self.make_report()
        assert auc_trapezoid(list(report.roc)) == pytest.approx(report.auc, abs=1e-12)

    def test_format_is_key_value(self):
        report, _, _ = self.make_report()
        text = format_report(report)
        lines = dict(line.split(" = ", 1) for line in text.strip().split("\n"))
        assert float(lines["accuracy"]) == report.accuracy
        assert float(lines["auc"]) == report.auc
        assert int(lines["n_test"]) == 60
        assert lines["protocol"] == "unit-test protocol"

    def test_roc_csv_roundtrip(self, tmp_path):
        report, _, _ = self.make_report()
        path = tmp_path / "roc.csv"
        write_roc_csv(report.roc, path)
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "fpr,tpr"
        parsed = [tuple(map(float, line.split(","))) for line in lines[1:]]
        assert parsed == [(p.fpr, p.tpr) for p in report.roc]
