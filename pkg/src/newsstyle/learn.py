"""Linear SVM classification protocol: standardization, dual coordinate
descent training, stratified k-fold cross-validation, and the named
top-4 feature presets.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

PRESETS = {
    "body4": ("NN", "TTR", "WC", "quotes"),
    "title4": ("per_stop", "NN", "avg_wlen", "FK"),
}

_STD_FLOOR = 1e-12


class LearnError(ValueError):
    pass


@dataclass
class Standardizer:
    mean: np.ndarray
    std: np.ndarray

    def transform(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        X = np.where(np.isnan(X), self.mean, X)  # NA -> training mean
        return (X - self.mean) / self.std


def fit_standardizer(X: np.ndarray) -> Standardizer:
    """Per-feature z-scoring fitted on training rows only; NaN cells are
    ignored when estimating, constant features collapse to zero."""
    X = np.asarray(X, dtype=float)
    if X.size == 0:
        raise LearnError("cannot fit standardizer on empty matrix")
    with np.errstate(invalid="ignore"), warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)  # all-NaN columns
        mean = np.nanmean(X, axis=0)
        std = np.nanstd(X, axis=0)
    mean = np.where(np.isnan(mean), 0.0, mean)
    # constant feature: values equal the mean exactly, so 0 / floor == 0
    std = np.where(np.isnan(std) | (std < _STD_FLOOR), _STD_FLOOR, std)
    return Standardizer(mean=mean, std=std)


@dataclass
class SvmModel:
    weights: np.ndarray  # includes appended bias weight as last entry
    C: float
    label_map: dict[int, str]
    standardizer: Standardizer
    feature_names: tuple[str, ...] = ()
    seed: int = 0
    dual_objective_history: list[float] = field(default_factory=list)
    alpha: np.ndarray | None = None

    @property
    def bias(self) -> float:
        return float(self.weights[-1])

    def decision_values(self, X: np.ndarray) -> np.ndarray:
        Z = self.standardizer.transform(np.atleast_2d(np.asarray(X, dtype=float)))
        Zb = np.hstack([Z, np.ones((Z.shape[0], 1))])
        return Zb @ self.weights

    def save(self, path: str | Path) -> None:
        payload = {
            "format": "newsstyle-svm",
            "version": "1",
            "feature_names": list(self.feature_names),
            "mean": self.standardizer.mean.tolist(),
            "std": [("inf" if not np.isfinite(s) else s) for s in self.standardizer.std],
            "weights": self.weights.tolist(),
            "C": self.C,
            "seed": self.seed,
            "label_map": {str(k): v for k, v in self.label_map.items()},
        }
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SvmModel":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("format") != "newsstyle-svm":
            raise LearnError(f"{path}: not an SVM model file")
        std = np.array([np.inf if s == "inf" else float(s) for s in payload["std"]])
        return cls(
            weights=np.array(payload["weights"], dtype=float),
            C=float(payload["C"]),
            label_map={int(k): v for k, v in payload["label_map"].items()},
            standardizer=Standardizer(np.array(payload["mean"], dtype=float), std),
            feature_names=tuple(payload["feature_names"]),
            seed=int(payload["seed"]),
        )


def train_svm(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 1.0,
    tol: float = 1e-4,
    max_epochs: int = 1000,
    seed: int = 0,
    label_map: dict[int, str] | None = None,
    feature_names: tuple[str, ...] = (),
    standardizer: Standardizer | None = None,
) -> SvmModel:
    """L1-loss linear SVM by dual coordinate descent (Hsieh et al. style).

    The bias is an appended constant feature, so the dual has simple box
    constraints alpha_i in [0, C]. Sweep order is seeded-shuffled per
    epoch; training stops when the largest projected-gradient violation
    falls below tol.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if set(np.unique(y)) != {-1.0, 1.0}:
        raise LearnError("train_svm requires both classes (-1 and +1) present")
    if standardizer is None:
        standardizer = fit_standardizer(X)
    Z = standardizer.transform(X)
    Zb = np.hstack([Z, np.ones((Z.shape[0], 1))])
    n, d = Zb.shape
    q = np.einsum("ij,ij->i", Zb, Zb)  # diagonal of the Gram matrix
    q = np.where(q <= 0, 1.0, q)

    alpha = np.zeros(n)
    w = np.zeros(d)
    rng = np.random.default_rng(seed)
    history: list[float] = []
    order = np.arange(n)
    for _ in range(max_epochs):
        rng.shuffle(order)
        max_violation = 0.0
        for i in order:
            g = y[i] * (Zb[i] @ w) - 1.0
            if alpha[i] <= 0.0:
                pg = min(g, 0.0)
            elif alpha[i] >= C:
                pg = max(g, 0.0)
            else:
                pg = g
            max_violation = max(max_violation, abs(pg))
            if pg != 0.0:
                new = min(max(alpha[i] - g / q[i], 0.0), C)
                if new != alpha[i]:
                    w += (new - alpha[i]) * y[i] * Zb[i]
                    alpha[i] = new
        history.append(0.5 * float(w @ w) - float(alpha.sum()))
        if max_violation < tol:
            break
    return SvmModel(
        weights=w, C=C,
        label_map=label_map or {-1: "-1", 1: "+1"},
        standardizer=standardizer, feature_names=feature_names, seed=seed,
        dual_objective_history=history, alpha=alpha,
    )


def predict(model: SvmModel, x: np.ndarray) -> tuple[str, float]:
    """Label and decision value for one feature row; an exact zero
    decision value goes to the positive class."""
    value = float(model.decision_values(np.atleast_2d(x))[0])
    return model.label_map[1 if value >= 0 else -1], value


def stratified_kfold(labels, k: int, seed: int = 0) -> list[list[int]]:
    """k disjoint index folds; per-class counts differ by at most 1."""
    labels = list(labels)
    if k < 2:
        raise LearnError("k must be >= 2")
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for cls in sorted(set(labels)):
        idx = [i for i, l in enumerate(labels) if l == cls]
        rng.shuffle(idx)
        for j, i in enumerate(idx):
            folds[j % k].append(i)
    return [sorted(f) for f in folds]


def majority_baseline(labels) -> float:
    labels = list(labels)
    if not labels:
        raise LearnError("empty label list")
    counts = {l: labels.count(l) for l in set(labels)}
    return max(counts.values()) / len(labels)


@dataclass
class CvReport:
    fold_accuracies: list[float]
    mean_accuracy: float
    baseline: float
    k: int
    seed: int
    feature_names: tuple[str, ...]
    pair: tuple[str, str] = ("", "")


def cross_validate(
    X: np.ndarray,
    labels,
    k: int = 5,
    C: float = 1.0,
    seed: int = 0,
    feature_names: tuple[str, ...] = (),
    tol: float = 1e-4,
    max_epochs: int = 1000,
) -> CvReport:
    """Stratified k-fold CV of the linear SVM; the standardizer is refit
    on each fold's training rows only."""
    X = np.asarray(X, dtype=float)
    labels = list(labels)
    classes = sorted(set(labels))
    if len(classes) != 2:
        raise LearnError(f"cross_validate expects a binary task, got {classes}")
    if min(labels.count(c) for c in classes) < k:
        raise LearnError("need at least k samples per class")
    lmap = {-1: classes[0], 1: classes[1]}
    y = np.array([1.0 if l == classes[1] else -1.0 for l in labels])

    folds = stratified_kfold(labels, k, seed)
    accuracies = []
    for fold in folds:
        test = np.array(fold, dtype=int)
        train = np.array([i for i in range(len(labels)) if i not in set(fold)], dtype=int)
        model = train_svm(
            X[train], y[train], C=C, tol=tol, max_epochs=max_epochs,
            seed=seed, label_map=lmap, feature_names=feature_names,
        )
        values = model.decision_values(X[test])
        pred = np.where(values >= 0, 1.0, -1.0)
        accuracies.append(float(np.mean(pred == y[test])))
    return CvReport(
        fold_accuracies=accuracies,
        mean_accuracy=float(np.mean(accuracies)),
        baseline=majority_baseline(labels),
        k=k, seed=seed, feature_names=feature_names,
        pair=(classes[0], classes[1]),
    )
