#ifndef SEMPREFETCH_ERRORS_H_
#define SEMPREFETCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace semprefetch {

// Label is not part of the ontology.
class NodeNotFound : public std::out_of_range {
 public:
  explicit NodeNotFound(const std::string& label)
      : std::out_of_range("ontology node not found: " + label) {}
};

class InvalidUrl : public std::invalid_argument {
 public:
  explicit InvalidUrl(const std::string& url)
      : std::invalid_argument("invalid url: " + url) {}
};

// A resource file (stop words, lemma map, table, ontology, lexicon) is
// malformed or violates one of its invariants.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semprefetch

#endif  // SEMPREFETCH_ERRORS_H_
