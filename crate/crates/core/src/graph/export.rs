use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{GraphReport, NonSolvableGraph};
use crate::error::{Error, Result};
use crate::solv::RelationMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct GroupHeader<'a> {
    label: &'a str,
    order: usize,
    radical_size: usize,
}

#[derive(Serialize)]
struct Vertex {
    index: usize,
    label: String,
    degree: usize,
    order: u32,
}

#[derive(Serialize)]
struct Document<'a> {
    group: GroupHeader<'a>,
    mode: RelationMode,
    induced: bool,
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a GraphReport>,
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT or JSON rendering. Vertices appear in index order and
/// each edge once, lower index first.
pub fn export_graph(
    graph: &NonSolvableGraph<'_>,
    format: ExportFormat,
    report: Option<&GraphReport>,
) -> Result<String> {
    let group = graph.group();
    match format {
        ExportFormat::Dot => {
            let mut out = String::new();
            writeln!(out, "graph \"{}\" {{", escape(group.label())).unwrap();
            writeln!(
                out,
                "  graph [mode=\"{}\", induced={}, order={}, radical_size={}];",
                graph.mode(),
                graph.is_induced(),
                group.order(),
                graph.radical_size()
            )
            .unwrap();
            for (&v, &d) in graph.vertices().iter().zip(graph.degrees()) {
                writeln!(
                    out,
                    "  {v} [label=\"{}\", degree={d}];",
                    escape(&group.render(v))
                )
                .unwrap();
            }
            for (a, b) in graph.edges() {
                writeln!(out, "  {a} -- {b};").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        ExportFormat::Json => {
            let doc = Document {
                group: GroupHeader {
                    label: group.label(),
                    order: group.order(),
                    radical_size: graph.radical_size(),
                },
                mode: graph.mode(),
                induced: graph.is_induced(),
                vertices: graph
                    .vertices()
                    .iter()
                    .zip(graph.degrees())
                    .map(|(&v, &d)| Vertex {
                        index: v,
                        label: group.render(v),
                        degree: d,
                        order: group.element_order(v),
                    })
                    .collect(),
                edges: graph.edges().into_iter().map(|(a, b)| [a, b]).collect(),
                report,
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("graph document serializes");
            text.push('\n');
            Ok(text)
        }
    }
}
