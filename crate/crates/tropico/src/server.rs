//! HTTP service for the browser front end.
//!
//! | route | result |
//! |---|---|
//! | `POST /api/problem` | [`ProblemResponse`] |
//! | `GET /api/problem/{id}/frontier` | [`FrontierResponse`](crate::api::FrontierResponse) |
//! | `GET /api/problem/{id}/solve?alpha=v` | [`SolveResponse`](crate::api::SolveResponse) |
//! | `GET /api/problem/{id}/error?x=v1,v2,…` | [`ErrorResponse`](crate::api::ErrorResponse) |
//!
//! Failures answer 400 (malformed input), 404 (unknown id) or 422 (alpha
//! outside the frontier, with the valid `interval`).

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Serialize;
use tower_http::services::ServeDir;

use crate::api::{parse_list, ApiError, ProblemResponse, Session};
use crate::problem::Problem;

/// Largest accepted number of alternatives.
pub const MAX_N: usize = 64;

#[derive(Clone, Default)]
pub struct AppState {
    store: Arc<RwLock<HashMap<String, Arc<Session>>>>,
    next_id: Arc<AtomicU64>,
    tol_override: Option<f64>,
}

impl AppState {
    pub fn new(tol_override: Option<f64>) -> Self {
        AppState {
            tol_override,
            ..Default::default()
        }
    }

    /// Stores a session and returns its id.
    pub fn insert(&self, session: Session) -> String {
        let id = (self.next_id.fetch_add(1, Ordering::Relaxed) + 1).to_string();
        self.store
            .write()
            .expect("store lock")
            .insert(id.clone(), Arc::new(session));
        id
    }

    pub fn get(&self, id: &str) -> Result<Arc<Session>, ApiError> {
        self.store
            .read()
            .expect("store lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::NotFound(id.to_string()))
    }

    /// Parses, validates and stores a JSON problem.
    pub fn upload(&self, body: &str) -> Result<ProblemResponse, ApiError> {
        let problem = Problem::from_json(body, self.tol_override)
            .map_err(|e| ApiError::BadRequest(e.to_string()))?;
        if problem.n() > MAX_N {
            return Err(ApiError::BadRequest(format!(
                "{} alternatives exceed the limit of {MAX_N}",
                problem.n()
            )));
        }
        let session = Session::new(problem)?;
        let id = self.insert(session);
        Ok(self.get(&id)?.describe(&id))
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self {
            ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::NotFound(_) => StatusCode::NOT_FOUND,
            ApiError::Domain { .. } => StatusCode::UNPROCESSABLE_ENTITY,
        };
        (status, json(&self.body())).into_response()
    }
}

fn json<T: Serialize>(value: &T) -> impl IntoResponse {
    (
        [(header::CONTENT_TYPE, "application/json; charset=utf-8")],
        serde_json::to_string(value).expect("serializable"),
    )
}

type ApiResult = Result<Response, ApiError>;

async fn create(State(state): State<AppState>, body: Bytes) -> ApiResult {
    let text = std::str::from_utf8(&body)
        .map_err(|e| ApiError::BadRequest(format!("body is not UTF-8: {e}")))?;
    Ok(json(&state.upload(text)?).into_response())
}

async fn describe(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult {
    Ok(json(&state.get(&id)?.describe(&id)).into_response())
}

async fn frontier(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult {
    Ok(json(&state.get(&id)?.frontier()).into_response())
}

fn param<'a>(q: &'a HashMap<String, String>, name: &str) -> Result<&'a str, ApiError> {
    q.get(name)
        .map(String::as_str)
        .ok_or_else(|| ApiError::BadRequest(format!("missing query parameter {name:?}")))
}

async fn solve(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<HashMap<String, String>>,
) -> ApiResult {
    let session = state.get(&id)?;
    let alpha = param(&q, "alpha")?;
    let alpha: f64 = alpha
        .trim()
        .parse()
        .map_err(|_| ApiError::BadRequest(format!("alpha {alpha:?} is not a number")))?;
    Ok(json(&session.solve(alpha)?).into_response())
}

async fn error(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<HashMap<String, String>>,
) -> ApiResult {
    let session = state.get(&id)?;
    let x = parse_list(param(&q, "x")?)?;
    Ok(json(&session.error(&x)?).into_response())
}

const PLACEHOLDER: &str = "<!doctype html>
<html><head><meta charset=\"utf-8\"><title>tropico</title></head>
<body><h1>tropico</h1>
<p>The JSON API is served under <code>/api/problem</code>. Start the service
with <code>--ui-dir</code> to serve a front end from this address.</p></body></html>
";

/// The API routes plus either a static directory or a placeholder page.
pub fn router(state: AppState, ui_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/problem", post(create))
        .route("/api/problem/{id}", get(describe))
        .route("/api/problem/{id}/frontier", get(frontier))
        .route("/api/problem/{id}/solve", get(solve))
        .route("/api/problem/{id}/error", get(error))
        .with_state(state);
    match ui_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(|| async { Html(PLACEHOLDER) })),
    }
}

/// Binds `addr` and serves until the process is stopped.
pub async fn serve(
    addr: SocketAddr,
    state: AppState,
    ui_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state, ui_dir)).await
}
