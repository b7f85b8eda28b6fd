use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channel::{ChannelParams, TopologyParams};
use crate::error::{Error, Result};
use crate::model::{LinkQualityMatrix, Network, NodeId, Point};

/// A persisted network with its link qualities and generation parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub network: Network,
    pub quality: LinkQualityMatrix,
    pub channel: ChannelParams,
    pub topology: TopologyParams,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    params: Params,
    nodes: Vec<NodeRecord>,
    /// One row per transceiver in id order, one column per node.
    q: Vec<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Params {
    channel: ChannelParams,
    topology: TopologyParams,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRecord {
    id: usize,
    x: f64,
    y: f64,
    is_sink: bool,
}

impl Scenario {
    pub fn to_json(&self) -> Result<String> {
        let file = ScenarioFile {
            params: Params {
                channel: self.channel,
                topology: self.topology,
            },
            nodes: self
                .network
                .node_ids()
                .map(|id| {
                    let Point { x, y } = self.network.position(id);
                    NodeRecord {
                        id: id.0,
                        x,
                        y,
                        is_sink: self.network.is_sink(id),
                    }
                })
                .collect(),
            q: self.quality.rows().map(<[f64]>::to_vec).collect(),
        };
        serde_json::to_string_pretty(&file).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ScenarioFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut positions = Vec::with_capacity(file.nodes.len());
        let mut sinks = Vec::new();
        for (i, node) in file.nodes.iter().enumerate() {
            if node.id != i {
                return Err(Error::Parse(format!(
                    "nodes[{i}]: id {} out of sequence (ids must be 0..n in order)",
                    node.id
                )));
            }
            positions.push(Point::new(node.x, node.y));
            if node.is_sink {
                sinks.push(NodeId(i));
            }
        }
        let network =
            Network::new(positions, &sinks).map_err(|e| Error::Parse(format!("nodes: {e}")))?;
        let quality = LinkQualityMatrix::from_rows(&network, file.q)
            .map_err(|e| Error::Parse(format!("q: {e}")))?;
        file.params
            .channel
            .validate()
            .map_err(|e| Error::Parse(format!("params.channel: {e}")))?;
        Ok(Scenario {
            network,
            quality,
            channel: file.params.channel,
            topology: file.params.topology,
        })
    }
}

pub fn save_scenario(
    path: impl AsRef<Path>,
    network: &Network,
    quality: &LinkQualityMatrix,
    channel: &ChannelParams,
    topology: &TopologyParams,
) -> Result<()> {
    let scenario = Scenario {
        network: network.clone(),
        quality: quality.clone(),
        channel: *channel,
        topology: *topology,
    };
    fs::write(path, scenario.to_json()?)?;
    Ok(())
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    Scenario::from_json(&fs::read_to_string(path)?)
}
