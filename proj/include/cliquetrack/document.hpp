#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cliquetrack/model.hpp"
#include "cliquetrack/reveal.hpp"
#include "cliquetrack/stream.hpp"

namespace cliquetrack {

// One self-contained input file: the system model plus the optional
// scenario and the detection / track parameter blocks consumed downstream.
struct Document {
    SystemModel model;
    std::optional<Scenario> scenario;
    StructureSpec detection;
    TrackConfig track;
};

// Structural parse: JSON syntax and field shapes only. Throws SyntaxError
// (position-reported), BadType, or MissingField; semantic problems are left
// to validation so they can all be listed at once.
Document parse_document(const std::string& text);

// Structural parse plus full validation; the first violation is thrown as
// an Error with its own code (UnknownId, LevelOutOfRange, LengthMismatch,
// ...). Every accepted document validates clean.
Document parse_model(const std::string& text);

// validate(model, scenario) plus detection/track parameter checks.
std::vector<Violation> validate_document(const Document& doc);

// Canonical form: sorted keys, two-space indent, expanded state streams,
// defaults made explicit, trailing newline. parse -> serialize is a fixed
// point on this form.
std::string serialize_document(const Document& doc);

// Whole-file read. Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// read_text_file + parse_model.
Document load_document_file(const std::filesystem::path& path);

} // namespace cliquetrack
