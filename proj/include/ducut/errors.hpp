// Copyright 2026 The Ducut Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ducut {

/// Lexical or syntactic failure, with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// A retained node requires a child that has been deleted.
class UnparseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A removal would orphan a mandatory child position.
class StructureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A variable reference or call has no declaration to bind to.
class UnresolvedSymbol : public std::runtime_error {
 public:
  UnresolvedSymbol(const std::string& name, int line, int col)
      : std::runtime_error("unresolved symbol '" + name + "' at " +
                           std::to_string(line) + ":" + std::to_string(col)),
        name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A def-use closure grew until it would swallow the entry function.
class ClosureExplosion : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The test script is missing, not executable, or could not be spawned.
class ScriptError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The oracle invocation budget is spent; no further spawns are allowed.
class BudgetExhausted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The unreduced input already fails the test script.
class OriginalFailsOracle : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ddmin was handed a unit list whose full set does not pass.
class PreconditionFailed : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A persisted file exists but does not match its schema.
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant did not hold; always a ducut bug.
class InternalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ducut
