#ifndef PGD_ERRORS_HPP
#define PGD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgd {

// Rejection of user-supplied input: a broken instance document, an
// infeasible generator request, or an enumeration that is too large.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        NotTotal,       // a (player, index) pair has no image, or has two
        DuplicateImage, // two pairs map to the same card
        UnknownPicture,
        UnknownPlayer,
        SuitOutOfRange,
        DuplicateId,    // repeated name in the players or pictures list
        Infeasible,     // generator: more players than pictures
        TooLarge        // enumerator guard
    };

    ValidationError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Broken game invariant. For validated input every one of these is an
// engine bug, not a property of the instance.
class EngineError : public std::runtime_error {
public:
    enum class Kind {
        UnknownPlayer,
        UnshapedHand,        // a spade exists but spot 0 is not a spade
        RequestConflict,     // two players asked for the same card
        RequestedCardMissing,
        RoundLimitExceeded,
        NotStable
    };

    EngineError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Malformed document handed to the io layer.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by the oracle when an independent re-check of a state or trace
// fails. Like EngineError, this signals a bug somewhere, never bad input.
class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pgd

#endif
