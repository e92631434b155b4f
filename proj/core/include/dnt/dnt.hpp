#ifndef DNT_DNT_HPP
#define DNT_DNT_HPP

// Umbrella header for the whole library.

#include "dnt/belief_interval.hpp"
#include "dnt/dense_matrix.hpp"
#include "dnt/dnumber.hpp"
#include "dnt/error.hpp"
#include "dnt/frame.hpp"
#include "dnt/instance_io.hpp"
#include "dnt/mass_function.hpp"
#include "dnt/measures.hpp"
#include "dnt/nonexclusivity.hpp"
#include "dnt/oracle.hpp"

#endif  // DNT_DNT_HPP
