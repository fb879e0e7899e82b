#pragma once

// Convenience include for the whole library.

#include "constructors.hpp"
#include "degree_sequence.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "isomorphism.hpp"
#include "oracle.hpp"
#include "partitions.hpp"
#include "permutation.hpp"
#include "recognition.hpp"

