//! JSON documents for trees, drawings and extracted graphs.
//!
//! Every document carries a `version` field. Edges in drawing documents
//! refer to vertex ids; annotation indices refer to positions in the
//! vertex arrays. Coordinates are written in the shortest form that parses
//! back to the same `f64`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Beta, Point};
use crate::proximity::{Annotations, DrawingPair, Side};
use crate::tree_model::{RootedTree, Tree};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("{path}: {message}")]
    File { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {field}: {message}")]
    Field { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, IoError>;

fn field(field: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(field(
            "version",
            format!("unsupported version {v}, expected {FORMAT_VERSION}"),
        ))
    }
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    fs::read_to_string(path).map_err(|e| IoError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write_file(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, text).map_err(|e| IoError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeDocument {
    pub version: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sparse_leaves: Option<Vec<usize>>,
    /// Child order per vertex; requires `root`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<Vec<usize>>>,
}

impl TreeDocument {
    pub fn from_tree(t: &Tree) -> Self {
        TreeDocument {
            version: FORMAT_VERSION,
            n: t.len(),
            edges: t.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            root: None,
            sparse_leaves: None,
            children: None,
        }
    }

    pub fn from_rooted(rt: &RootedTree, sparse_leaves: Option<&[usize]>) -> Self {
        TreeDocument {
            root: Some(rt.root()),
            sparse_leaves: sparse_leaves.map(<[usize]>::to_vec),
            children: Some(rt.all_children().to_vec()),
            ..Self::from_tree(rt.tree())
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TreeDocument = parse(text)?;
        check_version(doc.version)?;
        doc.rooted()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        render(self)
    }

    pub fn tree(&self) -> Result<Tree> {
        for (k, e) in self.edges.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= self.n) {
                return Err(field(
                    format!("edges[{k}]"),
                    format!("vertex index {v} out of range for n = {}", self.n),
                ));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Tree::from_edges(self.n, &edges).map_err(|e| field("edges", e.to_string()))
    }

    /// The rooted tree, when the document names a root.
    pub fn rooted(&self) -> Result<Option<RootedTree>> {
        let t = self.tree()?;
        let Some(root) = self.root else {
            if self.children.is_some() {
                return Err(field("children", "child order given without a root"));
            }
            if self.sparse_leaves.is_some() {
                return Err(field("sparse_leaves", "leaf set given without a root"));
            }
            return Ok(None);
        };
        if root >= self.n {
            return Err(field(
                "root",
                format!("vertex index {root} out of range for n = {}", self.n),
            ));
        }
        let rt = match &self.children {
            Some(ch) => RootedTree::with_children(t, root, ch.clone())
                .map_err(|e| field("children", e.to_string()))?,
            None => RootedTree::new(t, root).map_err(|e| field("root", e.to_string()))?,
        };
        if let Some(set) = &self.sparse_leaves {
            for (k, &v) in set.iter().enumerate() {
                if v >= self.n || !rt.is_leaf(v) || v == root {
                    return Err(field(
                        format!("sparse_leaves[{k}]"),
                        format!("{v} is not a leaf"),
                    ));
                }
            }
        }
        Ok(Some(rt))
    }

    pub fn rooted_or_center(&self) -> Result<RootedTree> {
        match self.rooted()? {
            Some(rt) => Ok(rt),
            None => {
                let t = self.tree()?;
                let c = t.center();
                RootedTree::new(t, c).map_err(|e| field("edges", e.to_string()))
            }
        }
    }
}

pub fn load_tree(path: impl AsRef<Path>) -> Result<TreeDocument> {
    TreeDocument::from_json(&read_file(path)?)
}

pub fn save_tree(path: impl AsRef<Path>, doc: &TreeDocument) -> Result<()> {
    write_file(path, &doc.to_json())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideDoc {
    pub vertices: Vec<VertexDoc>,
    /// Pairs of vertex ids.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    pub version: u32,
    pub sides: [SideDoc; 2],
    #[serde(default, skip_serializing_if = "is_empty")]
    pub annotations: Annotations,
}

fn is_empty(a: &Annotations) -> bool {
    *a == Annotations::default()
}

impl DrawingDocument {
    pub fn from_drawing(d: &DrawingPair) -> Self {
        let side = |s: &Side| SideDoc {
            vertices: s
                .ids
                .iter()
                .zip(&s.points)
                .map(|(&id, p)| VertexDoc { id, x: p.x, y: p.y })
                .collect(),
            edges: s.edges.iter().map(|&(u, v)| [s.ids[u], s.ids[v]]).collect(),
        };
        DrawingDocument {
            version: FORMAT_VERSION,
            sides: [side(&d.sides[0]), side(&d.sides[1])],
            annotations: d.annotations.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DrawingDocument = parse(text)?;
        check_version(doc.version)?;
        doc.drawing()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        render(self)
    }

    pub fn drawing(&self) -> Result<DrawingPair> {
        let mut sides = Vec::with_capacity(2);
        for (i, s) in self.sides.iter().enumerate() {
            let mut index = BTreeMap::new();
            for (k, v) in s.vertices.iter().enumerate() {
                if index.insert(v.id, k).is_some() {
                    return Err(field(
                        format!("sides[{i}].vertices[{k}]"),
                        format!("duplicate id {}", v.id),
                    ));
                }
            }
            let mut edges = Vec::with_capacity(s.edges.len());
            for (k, e) in s.edges.iter().enumerate() {
                let look = |id: usize| {
                    index.get(&id).copied().ok_or_else(|| {
                        field(
                            format!("sides[{i}].edges[{k}]"),
                            format!("unknown vertex id {id}"),
                        )
                    })
                };
                edges.push((look(e[0])?, look(e[1])?));
            }
            sides.push(Side {
                ids: s.vertices.iter().map(|v| v.id).collect(),
                points: s.vertices.iter().map(|v| Point::new(v.x, v.y)).collect(),
                edges,
            });
        }
        let side1 = sides.pop().expect("two sides");
        let side0 = sides.pop().expect("two sides");
        let mut d = DrawingPair::new(side0, side1).map_err(|e| field("sides", e.to_string()))?;
        let a = &self.annotations;
        for (i, side) in d.sides.iter().enumerate() {
            if let Some(r) = a.roots.map(|r| r[i]).filter(|&r| r >= side.len()) {
                return Err(field(
                    format!("annotations.roots[{i}]"),
                    format!("index {r} out of range"),
                ));
            }
            if let Some(b) = a.b_vertices.and_then(|b| b[i]).filter(|&b| b >= side.len()) {
                return Err(field(
                    format!("annotations.b_vertices[{i}]"),
                    format!("index {b} out of range"),
                ));
            }
        }
        d.annotations = a.clone();
        Ok(d)
    }
}

pub fn load_drawing(path: impl AsRef<Path>) -> Result<DrawingPair> {
    DrawingDocument::from_json(&read_file(path)?)?.drawing()
}

pub fn save_drawing(path: impl AsRef<Path>, d: &DrawingPair) -> Result<()> {
    write_file(path, &DrawingDocument::from_drawing(d).to_json())
}

/// The two mutual-witness graphs of a drawing at one β, as id pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphsDocument {
    pub version: u32,
    pub beta: Beta,
    pub closed: bool,
    pub edges: [Vec<[usize; 2]>; 2],
}

impl GraphsDocument {
    pub fn to_json(&self) -> String {
        render(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphsDocument = parse(text)?;
        check_version(doc.version)?;
        Ok(doc)
    }
}
