#ifndef FLOWCERT_FLOWCERT_HPP
#define FLOWCERT_FLOWCERT_HPP

#include "flowcert/divergent.hpp"
#include "flowcert/dominators.hpp"
#include "flowcert/error.hpp"
#include "flowcert/graph.hpp"
#include "flowcert/lowhigh.hpp"
#include "flowcert/valid_set.hpp"

#endif
