"""HTTP prediction service over a loaded model artifact.

JSON API, versioned under /api/v1/, with permissive CORS so the browser UI
can run from any origin. The artifact is read-only after load; requests share
it without locking. Prediction goes through the same predict_one path as the
CLI, so both surfaces always agree.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .artifact import (
    FeatureValidationError,
    ModelArtifact,
    load_artifact,
    predict_one,
    report_to_dict,
)


def create_app(artifact: ModelArtifact) -> FastAPI:
    app = FastAPI(title="bcpredict service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/api/v1/predict")
    async def predict(request: Request):
        try:
            body = await request.json()
        except Exception:
            return JSONResponse(status_code=400, content={"detail": "malformed JSON body"})
        if not isinstance(body, dict) or not isinstance(body.get("features"), dict):
            return JSONResponse(
                status_code=422,
                content={"detail": [{"field": "features", "message": "missing feature map"}]},
            )
        try:
            response = predict_one(artifact, body["features"])
        except FeatureValidationError as exc:
            return JSONResponse(
                status_code=422,
                content={"detail": [{"field": f, "message": m} for f, m in exc.problems]},
            )
        return {
            "probability": response.probability,
            "label": response.label,
            "threshold": response.threshold,
            "model_version": response.model_version,
        }

    @app.get("/api/v1/model")
    def model_metadata():
        return {
            "model_version": artifact.model_version,
            "threshold": artifact.threshold,
            "feature_names": list(artifact.feature_names),
            "feature_stats": {
                name: {"min": st.min, "mean": st.mean, "max": st.max}
                for name, st in artifact.feature_stats.items()
            },
            "label_map": {str(k): v for k, v in artifact.label_map.items()},
            "test_accuracy": artifact.metrics.accuracy,
        }

    @app.get("/api/v1/metrics")
    def metrics():
        return report_to_dict(artifact.metrics)

    @app.get("/api/v1/roc")
    def roc():
        return [
            {"fpr": p.fpr, "tpr": p.tpr, "threshold": None if p.threshold == float("inf") else p.threshold}
            for p in artifact.metrics.roc
        ]

    return app


def serve_http(model_path: str | Path, port: int, host: str = "127.0.0.1") -> None:
    """Load the artifact and serve until interrupted."""
    import uvicorn

    artifact = load_artifact(model_path)
    app = create_app(artifact)
    uvicorn.run(app, host=host, port=port, log_level="info")
