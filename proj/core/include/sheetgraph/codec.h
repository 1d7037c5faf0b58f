// Copyright 2026 The Sheetgraph Authors
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

// JSON encodings shared by the session log and the HTTP API. Decoders
// throw Error(kParameter) naming the offending field.

#ifndef SHEETGRAPH_CODEC_H_
#define SHEETGRAPH_CODEC_H_

#include <nlohmann/json.hpp>

#include "sheetgraph/collector.h"
#include "sheetgraph/error.h"
#include "sheetgraph/session.h"

namespace sheetgraph {

using Json = nlohmann::json;

Json encode(const CellRef &ref);
CellRef decode_cell_ref(const Json &json);

Json encode(const Selection &selection);
Selection decode_selection(const Json &json);

Json encode(const Term &term);
Term decode_term(const Json &json);

Json encode(const Cell &cell);

// Parameters carry their kind: {"kind": "regex", "pattern": ...}. Date
// parameters without an "epoch" field get default_epoch.
Json encode(const ExtractorParams &params);
ExtractorParams decode_params(const Json &json, const std::string &default_epoch = "1970-01-01");

Json encode(const StagingRequest &request);
StagingRequest decode_request(const Json &json, const std::string &default_epoch = "1970-01-01");

Json encode(const StagingPayload &payload);
Json encode(const StagedResult &staged);

Json encode(const Adjustment &adjustment);
Adjustment decode_adjustment(StagingKind kind, const Json &json);

// Deltas are N-Triples lines, sorted.
Json encode(const CommitRecord &record);

Json encode(const CollectorConfig &config);
CollectorConfig decode_collector_config(const Json &json);

Json encode(const InstanceReport &report);
Json encode(const LiftReport &report);

Json encode(const Error &error);

std::vector<std::string> ntriples_lines(const std::vector<Triple> &triples);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_CODEC_H_
