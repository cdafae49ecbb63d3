// errors.hpp: exception taxonomy shared by every module.
#ifndef RPM_ERRORS_HPP
#define RPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpm {

/** Base class for all library errors. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateEdge : public Error {
public:
    explicit DuplicateEdge(const std::string& what) : Error(what) {}
};

class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& what) : Error(what) {}
};

class BadBoundaryEdge : public Error {
public:
    explicit BadBoundaryEdge(const std::string& what) : Error(what) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& what) : Error(what) {}
};

class GraphMismatch : public Error {
public:
    explicit GraphMismatch(const std::string& what) : Error(what) {}
};

class NotDominated : public Error {
public:
    explicit NotDominated(const std::string& what) : Error(what) {}
};

class OverlapParity : public Error {
public:
    explicit OverlapParity(const std::string& what) : Error(what) {}
};

class ParityMismatch : public Error {
public:
    explicit ParityMismatch(const std::string& what) : Error(what) {}
};

class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};

class CapLimitExceeded : public Error {
public:
    explicit CapLimitExceeded(const std::string& what) : Error(what) {}
};

class NotPreImage : public Error {
public:
    explicit NotPreImage(const std::string& what) : Error(what) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

class BadInput : public Error {
public:
    explicit BadInput(const std::string& what) : Error(what) {}
};

} // namespace rpm

#endif
