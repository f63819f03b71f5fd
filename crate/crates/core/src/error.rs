// Copyright 2026 The flowopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use crate::graph::VertexId;
use crate::phase::PhaseParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("no spider {0}")]
    MissingVertex(VertexId),
    #[error("diagram is not graph-like: {0}")]
    NotGraphLike(String),
    #[error("rewrite does not apply: {0}")]
    NoMatch(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("extraction failed: {0}")]
    Extraction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{what} has {qubits} qubits, the limit is {limit}")]
    TooLarge {
        what: &'static str,
        qubits: usize,
        limit: usize,
    },
    #[error("spider {0} carries an unresolved phase variable")]
    UnresolvedVariable(VertexId),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A QASM syntax or semantic error with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn from_phase(line: usize, e: PhaseParseError) -> ParseError {
        ParseError::new(line, e.to_string())
    }
}
