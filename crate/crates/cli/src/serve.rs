//! Session API for the homotopy puzzle.
//!
//! Every move is certified server side by the same code paths as the
//! library; the client only proposes. Sessions live in memory and can be
//! journaled as newline-delimited JSON.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path as UrlPath, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::cors::CorsLayer;

use congraph::canon::is_isomorphic;
use congraph::catalog;
use congraph::homotopy::{legal_moves, Move, TraceBuilder};
use congraph::Graph;

/// Largest attaching set offered by `legal-moves`.
pub const DEFAULT_MAX_ATTACH: usize = 3;
pub const DEFAULT_PAGE: usize = 200;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Goal {
    Point,
    Graph {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        graph: Graph,
    },
}

impl Goal {
    fn reached(&self, g: &Graph) -> bool {
        match self {
            Goal::Point => g.n() == 1,
            Goal::Graph { graph, .. } => is_isomorphic(g, graph).unwrap_or(false),
        }
    }
}

pub struct Session {
    id: String,
    builder: TraceBuilder,
    goal: Goal,
}

impl Session {
    fn view(&self) -> Value {
        let g = self.builder.current();
        let euler = g.clique_f_vector(200_000).ok().map(|f| f.euler_characteristic());
        json!({
            "id": self.id,
            "graph": g,
            "euler": euler,
            "history": self.builder.moves(),
            "moves": self.builder.moves().len(),
            "goal": self.goal,
            "solved": self.goal.reached(g),
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
enum Entry {
    Create { id: String, start: Graph, goal: Goal },
    Move { id: String, r#move: Move },
    Undo { id: String },
}

type Shared = Arc<Mutex<Session>>;

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, Shared>>>,
    journal: Option<Arc<Mutex<File>>>,
}

impl AppState {
    pub fn in_memory() -> Self {
        AppState::default()
    }

    /// Replays `path` if it exists, then appends to it.
    pub fn with_journal(path: &Path) -> std::io::Result<Self> {
        let mut state = AppState::default();
        if path.exists() {
            for (no, line) in BufReader::new(File::open(path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Entry>(&line) {
                    Ok(entry) => {
                        if let Err(e) = state.replay(entry) {
                            eprintln!("journal line {}: {e}", no + 1);
                        }
                    }
                    Err(e) => eprintln!("journal line {}: {e}", no + 1),
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        state.journal = Some(Arc::new(Mutex::new(file)));
        Ok(state)
    }

    fn replay(&self, entry: Entry) -> Result<(), String> {
        match entry {
            Entry::Create { id, start, goal } => {
                self.insert(Session { id, builder: TraceBuilder::new(start), goal });
                Ok(())
            }
            Entry::Move { id, r#move } => {
                let s = self.get(&id).ok_or("unknown session")?;
                let mut s = s.lock().unwrap();
                s.builder.push(r#move).map(|_| ()).map_err(|e| e.to_string())
            }
            Entry::Undo { id } => {
                let s = self.get(&id).ok_or("unknown session")?;
                s.lock().unwrap().builder.undo();
                Ok(())
            }
        }
    }

    fn record(&self, entry: &Entry) {
        if let Some(j) = &self.journal {
            let mut f = j.lock().unwrap();
            let line = serde_json::to_string(entry).expect("journal entry");
            if let Err(e) = writeln!(f, "{line}").and_then(|_| f.flush()) {
                eprintln!("journal write failed: {e}");
            }
        }
    }

    fn insert(&self, s: Session) {
        self.sessions.write().unwrap().insert(s.id.clone(), Arc::new(Mutex::new(s)));
    }

    fn get(&self, id: &str) -> Option<Shared> {
        self.sessions.read().unwrap().get(id).cloned()
    }
}

pub struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

type ApiResult = Result<Json<Value>, ApiError>;

fn session(state: &AppState, id: &str) -> Result<Shared, ApiError> {
    state.get(id).ok_or_else(|| ApiError(StatusCode::NOT_FOUND, format!("no session {id}")))
}

#[derive(Deserialize)]
pub struct CreateRequest {
    catalog: Option<String>,
    graph: Option<Graph>,
    /// `"point"` or a catalog graph name.
    goal: Option<String>,
    goal_graph: Option<Graph>,
}

fn catalog_graph(name: &str) -> Result<Graph, ApiError> {
    catalog::graph(name).map_err(|e| ApiError(StatusCode::BAD_REQUEST, e.to_string()))
}

async fn create(State(state): State<AppState>, Json(req): Json<CreateRequest>) -> ApiResult {
    let start = match (req.catalog, req.graph) {
        (Some(name), None) => catalog_graph(&name)?,
        (None, Some(g)) => g,
        _ => return Err(ApiError(StatusCode::BAD_REQUEST, "give exactly one of \"catalog\" or \"graph\"".into())),
    };
    let goal = match (req.goal.as_deref(), req.goal_graph) {
        (None | Some("point"), None) => Goal::Point,
        (Some(name), None) => Goal::Graph { name: Some(name.to_string()), graph: catalog_graph(name)? },
        (None, Some(graph)) => Goal::Graph { name: None, graph },
        (Some(_), Some(_)) => return Err(ApiError(StatusCode::BAD_REQUEST, "give at most one goal".into())),
    };
    let id = format!("{:016x}", rand::random::<u64>());
    let s = Session { id: id.clone(), builder: TraceBuilder::new(start.clone()), goal: goal.clone() };
    let view = s.view();
    state.insert(s);
    state.record(&Entry::Create { id, start, goal });
    Ok(Json(view))
}

async fn show(State(state): State<AppState>, UrlPath(id): UrlPath<String>) -> ApiResult {
    Ok(Json(session(&state, &id)?.lock().unwrap().view()))
}

#[derive(Deserialize)]
pub struct Page {
    offset: Option<usize>,
    limit: Option<usize>,
    max_attach: Option<usize>,
}

async fn legal(State(state): State<AppState>, UrlPath(id): UrlPath<String>, Query(page): Query<Page>) -> ApiResult {
    let g = session(&state, &id)?.lock().unwrap().builder.current().clone();
    let all = legal_moves(&g, page.max_attach.unwrap_or(DEFAULT_MAX_ATTACH));
    let offset = page.offset.unwrap_or(0);
    let limit = page.limit.unwrap_or(DEFAULT_PAGE);
    let moves: Vec<&Move> = all.iter().skip(offset).take(limit).collect();
    Ok(Json(json!({ "moves": moves, "total": all.len(), "offset": offset, "limit": limit })))
}

async fn apply(State(state): State<AppState>, UrlPath(id): UrlPath<String>, Json(mv): Json<Move>) -> ApiResult {
    let shared = session(&state, &id)?;
    let mut s = shared.lock().unwrap();
    s.builder.push(mv.clone()).map_err(|e| ApiError(StatusCode::CONFLICT, e.to_string()))?;
    state.record(&Entry::Move { id, r#move: mv });
    let mut view = s.view();
    view["certificate"] = json!(s.builder.moves().last().map(|step| &step.certificate));
    Ok(Json(view))
}

async fn undo(State(state): State<AppState>, UrlPath(id): UrlPath<String>) -> ApiResult {
    let shared = session(&state, &id)?;
    let mut s = shared.lock().unwrap();
    if s.builder.undo().is_none() {
        return Err(ApiError(StatusCode::CONFLICT, "nothing to undo".into()));
    }
    state.record(&Entry::Undo { id });
    Ok(Json(s.view()))
}

async fn list_catalog() -> Json<Value> {
    let examples: Vec<String> = catalog::standard_graphs().into_iter().map(|(n, _)| n).collect();
    Json(json!({
        "graphs": catalog::GRAPH_NAMES,
        "examples": examples,
        "puzzles": [
            { "name": "triangle to a point", "start": "K_3", "goal": "point" },
            { "name": "thicken the hexagon", "start": "C_6", "goal": "point" },
            { "name": "pentagon to hexagon", "start": "C_5", "goal": "C_6" },
            { "name": "octahedron to icosahedron", "start": "octahedron", "goal": "icosahedron" },
        ],
    }))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(show))
        .route("/session/{id}/legal-moves", get(legal))
        .route("/session/{id}/move", post(apply))
        .route("/session/{id}/undo", post(undo))
        .route("/catalog", get(list_catalog))
        .layer(CorsLayer::permissive())
        .with_state(state)
}

pub async fn serve(host: &str, port: u16, state: AppState) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
