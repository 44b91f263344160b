#pragma once

// Worked examples shared across the suites: a 20-step A-path with its
// 11-node glove tree, and a 28-step B-path with its size-16 Elena word and
// the broom tree of that Elena.

namespace fixtures {

inline const char* kPath20 = "UUUDUDDDUDUDUUDUDUDD";
inline const char* kTree11 = "(((()()))()()(()()()))";

inline const char* kBPath28 = "DDUDUUUDDUDUDDUDUDUUUDUDDDUU";
inline const char* kWord16 = "a p3 a p1 p1 p4 a a p2 a";
inline const char* kTree16 = "(((()()))(()()(()()()))()((())))";

} // namespace fixtures
