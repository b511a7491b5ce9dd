//! JSON certificates. Every decision command emits one object with the
//! question, the three-way answer, any witness (a facet order as indices
//! into the echoed canonical facet list, plus labels when the decision came
//! from an assignment search), and the work stats. Exit codes are derived
//! from the answer alone: 0 yes, 1 no, 2 undecided.

use serde::Serialize;
use shellab::shelling::FacetOrder;
use shellab::{Decision, SimplicialComplex, Stats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Undecided,
}

impl Answer {
    pub fn from_decision<T>(decision: &Decision<T>) -> Answer {
        match decision {
            Decision::Yes(_) => Answer::Yes,
            Decision::No => Answer::No,
            Decision::Undecided => Answer::Undecided,
        }
    }

    pub fn from_bool(value: bool) -> Answer {
        if value {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
            Answer::Undecided => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertStats {
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Debug, Serialize)]
pub struct Certificate {
    pub question: String,
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_assignment: Option<Vec<usize>>,
    pub stats: CertStats,
    /// The canonical facet list the order indices refer to.
    pub facets: Vec<Vec<usize>>,
}

impl Certificate {
    pub fn new(
        question: &str,
        complex: &SimplicialComplex,
        answer: Answer,
        order: Option<&FacetOrder>,
        h_assignment: Option<&[usize]>,
        stats: Stats,
        millis: u64,
    ) -> Certificate {
        Certificate {
            question: question.to_string(),
            answer,
            order: order.map(|o| o.as_slice().to_vec()),
            h_assignment: h_assignment.map(<[usize]>::to_vec),
            stats: CertStats { nodes: stats.nodes, millis },
            facets: complex.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_answer() {
        assert_eq!(Answer::Yes.exit_code(), 0);
        assert_eq!(Answer::No.exit_code(), 1);
        assert_eq!(Answer::Undecided.exit_code(), 2);
        assert_eq!(Answer::from_decision(&Decision::Yes(7)), Answer::Yes);
        assert_eq!(Answer::from_decision::<()>(&Decision::Undecided), Answer::Undecided);
    }

    #[test]
    fn certificates_serialize_with_optional_fields_elided() {
        let complex =
            SimplicialComplex::from_facets(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let cert = Certificate::new(
            "strong-shelling-order",
            &complex,
            Answer::No,
            None,
            None,
            Stats { nodes: 5 },
            1,
        );
        let json = cert.to_json();
        assert!(json.contains("\"answer\": \"no\""));
        assert!(!json.contains("\"order\""));
        assert!(!json.contains("h_assignment"));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["facets"][1][1], 3);
        assert_eq!(value["stats"]["nodes"], 5);
    }
}
