"""The five regression models, on plain numpy arrays.

Each ``fit_*`` returns a JSON-friendly parameter dict and each model has a
matching branch in ``predict_params``. Inputs are standardized with the
training mean and population standard deviation before fitting.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import RankDeficient, ValidationError


def standardizer(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = X.mean(axis=0)
    scale = X.std(axis=0)
    return mean, scale


def _z(X, mean, scale):
    safe = np.where(scale > 0, scale, 1.0)
    return (X - mean) / safe


def _check_rank(Z: np.ndarray, scale: np.ndarray) -> None:
    if np.any(scale == 0):
        raise RankDeficient("a selected feature is constant over the training data")
    A = np.column_stack([np.ones(len(Z)), Z])
    if np.linalg.matrix_rank(A) < A.shape[1]:
        raise RankDeficient(f"design matrix has rank {np.linalg.matrix_rank(A)} < {A.shape[1]} columns")


def _lstsq(A: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.linalg.lstsq(A, y, rcond=None)[0]


# -- linear -------------------------------------------------------------------

def fit_linear(X: np.ndarray, y: np.ndarray) -> dict:
    mean, scale = standardizer(X)
    Z = _z(X, mean, scale)
    _check_rank(Z, scale)
    beta = _lstsq(np.column_stack([np.ones(len(Z)), Z]), y)
    coef = beta[1:] / scale
    intercept = beta[0] - float(coef @ mean)
    return {"intercept": float(intercept), "coef": coef.tolist()}


def _predict_linear(p: dict, X: np.ndarray) -> np.ndarray:
    return p["intercept"] + X @ np.asarray(p["coef"], dtype=float).reshape(-1)


# -- polynomial -----------------------------------------------------------------

def poly2(Z: np.ndarray) -> np.ndarray:
    """Degree-2 expansion: z_i and z_i * z_j for i <= j."""
    p = Z.shape[1]
    cols = [Z[:, i] for i in range(p)]
    cols += [Z[:, i] * Z[:, j] for i in range(p) for j in range(i, p)]
    return np.column_stack(cols) if cols else np.empty((len(Z), 0))


def fit_polynomial(X: np.ndarray, y: np.ndarray) -> dict:
    mean, scale = standardizer(X)
    if np.any(scale == 0):
        raise RankDeficient("a selected feature is constant over the training data")
    P = poly2(_z(X, mean, scale))
    A = np.column_stack([np.ones(len(P)), P])
    if np.linalg.matrix_rank(A) < A.shape[1]:
        raise RankDeficient(f"degree-2 design needs rank {A.shape[1]}, has {np.linalg.matrix_rank(A)}")
    beta = _lstsq(A, y)
    return {"mean": mean.tolist(), "scale": scale.tolist(), "beta": beta.tolist()}


def _predict_polynomial(p: dict, X: np.ndarray) -> np.ndarray:
    P = poly2(_z(X, np.asarray(p["mean"]), np.asarray(p["scale"])))
    return np.column_stack([np.ones(len(P)), P]) @ np.asarray(p["beta"])


# -- lasso ----------------------------------------------------------------------

def lasso_cd(Z: np.ndarray, y: np.ndarray, alpha: float, beta0: np.ndarray | None = None,
             tol: float = 1e-12, max_iter: int = 100_000) -> np.ndarray:
    """Coordinate descent for (1/2n)||y - Z b||^2 + alpha ||b||_1 on centered data."""
    n, p = Z.shape
    b = np.zeros(p) if beta0 is None else beta0.copy()
    col_sq = (Z * Z).sum(axis=0) / n
    r = y - Z @ b
    for _ in range(max_iter):
        biggest = 0.0
        for j in range(p):
            if col_sq[j] == 0:
                continue
            old = b[j]
            rho = Z[:, j] @ r / n + col_sq[j] * old
            # relative slack so that alpha_max zeroes every coefficient despite rounding
            shrunk = abs(rho) - alpha
            new = math.copysign(shrunk, rho) / col_sq[j] if shrunk > 1e-12 * alpha else 0.0
            if new != old:
                r -= Z[:, j] * (new - old)
                b[j] = new
                biggest = max(biggest, abs(new - old))
        if biggest <= tol:
            break
    return b


def lasso_grid(Z: np.ndarray, y: np.ndarray, size: int = 20, ratio: float = 1e-4) -> list[float]:
    """Increasing penalties from ratio * alpha_max up to alpha_max, where every coefficient is 0."""
    alpha_max = float(np.max(np.abs(Z.T @ y)) / len(y)) if Z.size else 0.0
    if alpha_max == 0:
        return [0.0]
    return [float(a) for a in alpha_max * np.logspace(math.log10(ratio), 0, size)]


def lasso_path(Z: np.ndarray, y: np.ndarray, alphas: list[float]) -> list[np.ndarray]:
    """Warm-started solutions along ``alphas`` (any order), returned in input order."""
    order = sorted(range(len(alphas)), key=lambda i: -alphas[i])
    out: list[np.ndarray] = [np.empty(0)] * len(alphas)
    b = None
    for i in order:
        b = lasso_cd(Z, y, alphas[i], b)
        out[i] = b
    return out


def kfold(n: int, k: int, seed: int) -> list[np.ndarray]:
    """Test-index arrays of a seeded k-fold split."""
    if n < k or k < 2:
        raise ValidationError(f"cannot split {n} examples into {k} folds")
    perm = np.random.default_rng(seed).permutation(n)
    return [np.sort(f) for f in np.array_split(perm, k)]


def fit_lasso(X: np.ndarray, y: np.ndarray, alpha: float | None = None, folds: int = 5,
              seed: int = 0, grid_size: int = 20) -> dict:
    """Lasso with a fixed ``alpha``, or one chosen by k-fold CV over a grid."""
    mean, scale = standardizer(X)
    _check_rank(_z(X, mean, scale), scale)
    Z = _z(X, mean, scale)
    ym = float(y.mean())
    yc = y - ym
    cv = None
    if alpha is None:
        grid = lasso_grid(Z, yc, grid_size)
        k = min(folds, len(y))
        errs = np.zeros(len(grid))
        for test in kfold(len(y), k, seed):
            train = np.setdiff1d(np.arange(len(y)), test)
            m, s = standardizer(X[train])
            Zt = _z(X[train], m, s)
            yt = y[train] - y[train].mean()
            for i, b in enumerate(lasso_path(Zt, yt, grid)):
                pred = y[train].mean() + _z(X[test], m, s) @ b
                errs[i] += float(np.sum((pred - y[test]) ** 2))
        errs /= len(y)
        # ties go to the larger penalty
        best = min(range(len(grid)), key=lambda i: (errs[i], -grid[i]))
        alpha = grid[best]
        cv = {"grid": grid, "cv_mse": errs.tolist()}
    b = lasso_cd(Z, yc, alpha)
    coef = b / scale
    out = {"alpha": float(alpha), "intercept": float(ym - coef @ mean), "coef": coef.tolist()}
    if cv is not None:
        out["cv"] = cv
    return out


# -- random forest ----------------------------------------------------------------

def _best_split(X, y, features):
    n = len(y)
    best = None  # (sse, feature, threshold)
    for f in features:
        order = np.argsort(X[:, f], kind="stable")
        xs, ys = X[order, f], y[order]
        csum = np.cumsum(ys)
        csq = np.cumsum(ys * ys)
        tot, totsq = csum[-1], csq[-1]
        for i in range(1, n):
            if xs[i] == xs[i - 1]:
                continue
            nl, nr = i, n - i
            sl, sr = csum[i - 1], tot - csum[i - 1]
            sse = (csq[i - 1] - sl * sl / nl) + (totsq - csq[i - 1] - sr * sr / nr)
            if best is None or sse < best[0] - 1e-12:
                best = (sse, f, (xs[i] + xs[i - 1]) / 2)
    return best


def grow_tree(X, y, max_depth, max_features, rng, min_split=2) -> list:
    """Flat CART tree: node = [feature, threshold, left, right, value]; leaves have feature -1."""
    nodes: list = []

    def build(idx, depth):
        me = len(nodes)
        nodes.append([-1, 0.0, -1, -1, float(y[idx].mean())])
        if depth >= max_depth or len(idx) < min_split or np.all(y[idx] == y[idx][0]):
            return me
        p = X.shape[1]
        feats = np.sort(rng.choice(p, size=min(max_features, p), replace=False))
        split = _best_split(X[idx], y[idx], feats)
        if split is None:
            return me
        _, f, thr = split
        go_left = X[idx, f] <= thr
        nodes[me][0], nodes[me][1] = int(f), float(thr)
        nodes[me][2] = build(idx[go_left], depth + 1)
        nodes[me][3] = build(idx[~go_left], depth + 1)
        return me

    build(np.arange(len(y)), 0)
    return nodes


def tree_predict(nodes: list, X: np.ndarray) -> np.ndarray:
    out = np.empty(len(X))
    for r, x in enumerate(X):
        i = 0
        while nodes[i][0] >= 0:
            i = nodes[i][2] if x[nodes[i][0]] <= nodes[i][1] else nodes[i][3]
        out[r] = nodes[i][4]
    return out


def fit_forest(X: np.ndarray, y: np.ndarray, n_trees: int = 100, max_depth: int = 8,
               max_features: int | None = None, bootstrap: bool = True, seed: int = 0) -> dict:
    n, p = X.shape
    if max_features is None:
        max_features = max(1, int(math.sqrt(p)))
    rng = np.random.default_rng(seed)
    trees = []
    for _ in range(n_trees):
        idx = rng.integers(0, n, size=n) if bootstrap else np.arange(n)
        trees.append(grow_tree(X[idx], y[idx], max_depth, max_features, rng))
    return {"trees": trees}


def _predict_forest(p: dict, X: np.ndarray) -> np.ndarray:
    return np.mean([tree_predict(t, X) for t in p["trees"]], axis=0)


# -- neural network -----------------------------------------------------------------

def fit_ann(X: np.ndarray, y: np.ndarray, hidden: int = 16, epochs: int = 2000,
            learning_rate: float = 0.01, seed: int = 0) -> dict:
    """One tanh hidden layer, linear output, full-batch gradient descent on MSE.

    Inputs and target are standardized; the target scaling is undone at prediction.
    """
    mean, scale = standardizer(X)
    Z = _z(X, mean, scale)
    ym, ys = float(y.mean()), float(y.std()) or 1.0
    t = (y - ym) / ys
    n, p = Z.shape
    rng = np.random.default_rng(seed)
    W1 = rng.normal(0.0, 1.0 / math.sqrt(max(p, 1)), size=(p, hidden))
    b1 = np.zeros(hidden)
    W2 = rng.normal(0.0, 1.0 / math.sqrt(hidden), size=hidden)
    b2 = 0.0
    for _ in range(epochs):
        H = np.tanh(Z @ W1 + b1)
        err = H @ W2 + b2 - t
        g = 2.0 * err / n
        gW2 = H.T @ g
        gb2 = g.sum()
        gH = np.outer(g, W2) * (1.0 - H * H)
        gW1 = Z.T @ gH
        gb1 = gH.sum(axis=0)
        W1 -= learning_rate * gW1
        b1 -= learning_rate * gb1
        W2 -= learning_rate * gW2
        b2 -= learning_rate * gb2
    return {
        "mean": mean.tolist(), "scale": scale.tolist(), "y_mean": ym, "y_scale": ys,
        "W1": W1.tolist(), "b1": b1.tolist(), "W2": W2.tolist(), "b2": float(b2),
    }


def _predict_ann(p: dict, X: np.ndarray) -> np.ndarray:
    Z = _z(X, np.asarray(p["mean"]), np.asarray(p["scale"]))
    W1 = np.asarray(p["W1"], dtype=float).reshape(Z.shape[1], -1)
    H = np.tanh(Z @ W1 + np.asarray(p["b1"]))
    return (H @ np.asarray(p["W2"]) + p["b2"]) * p["y_scale"] + p["y_mean"]


_PREDICT = {
    "LINEAR": _predict_linear,
    "LASSO": _predict_linear,
    "POLYNOMIAL": _predict_polynomial,
    "RANDOM_FOREST": _predict_forest,
    "ANN": _predict_ann,
}


def predict_params(kind: str, params: dict, X: np.ndarray) -> np.ndarray:
    return _PREDICT[kind](params, np.asarray(X, dtype=float))
