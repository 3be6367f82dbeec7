// Copyright 2026 The pprq Authors
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

#ifndef PPRQ_ERRORS_H_
#define PPRQ_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pprq {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DanglingNode : public Error {
 public:
  explicit DanglingNode(std::uint64_t node)
      : Error("node " + std::to_string(node) + " has out-degree 0"),
        node_(node) {}
  std::uint64_t node() const { return node_; }

 private:
  std::uint64_t node_;
};

class DuplicateEdge : public Error {
 public:
  DuplicateEdge(std::uint64_t u, std::uint64_t v)
      : Error("duplicate edge (" + std::to_string(u) + "," +
              std::to_string(v) + ")") {}
};

class NodeIdOutOfRange : public Error {
 public:
  explicit NodeIdOutOfRange(std::uint64_t node)
      : Error("node id " + std::to_string(node) + " out of range") {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::uint64_t node, std::uint64_t index)
      : Error("neighbor index " + std::to_string(index) +
              " out of range at node " + std::to_string(node)) {}
};

class CapabilityDisabled : public Error {
 public:
  explicit CapabilityDisabled(const std::string& capability)
      : Error("capability disabled: " + capability) {}
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class SpecConstraintViolation : public Error {
 public:
  using Error::Error;
};

// Thrown when a family only has an asymptotic band; the band is attached.
class NoClosedForm : public Error {
 public:
  NoClosedForm(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

class RegimeUndefined : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

class ExplosionGuard : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class CapabilityMismatch : public Error {
 public:
  using Error::Error;
};

class InstanceLoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace pprq

#endif  // PPRQ_ERRORS_H_
