#pragma once

#include "collatz/approximation.hpp"
#include "collatz/emit.hpp"
#include "collatz/geometry.hpp"
#include "collatz/inversion.hpp"
#include "collatz/loops.hpp"
#include "collatz/odd_rational.hpp"
#include "collatz/rational.hpp"
#include "collatz/representation.hpp"
#include "collatz/sequence.hpp"
#include "collatz/verify.hpp"
